#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wavedecay/errors.hpp"
#include "wavedecay/iteration.hpp"
#include "wavedecay/sources.hpp"

using namespace wavedecay;

namespace {
const Rational sigma = rat(1, 10);
EngineConfig cfg() { return EngineConfig::defaults_for(sigma); }
}  // namespace

TEST_CASE("exterior seed sources") {
    SourceTriple s = assemble_sources(exterior_seed(), cfg());
    // coefficient tail sees <r>^(-5/2-s) both through the field and the
    // off-cone gradient
    CHECK(s.h1 == SourceBound(rat(5, 2) + sigma, rat(0), rat(0), SourceKind::plain));
    // cone part: <r>^(-3/2-s), gaining one u power under the time derivative
    CHECK(s.h2.a == rat(3, 2) + sigma);
    CHECK(s.h2.c == rat(0));
    CHECK(s.h2.kind == SourceKind::time_derivative);
    CHECK(s.h2.cone_supported);
    SourceBound d = time_differentiated(s.h2);
    CHECK(d.a == rat(3, 2) + sigma);
    CHECK(d.c == rat(1));
    // raw null interaction <r>^-2 <u>^-1
    CHECK(s.h3_raw.a == rat(2));
    CHECK(s.h3_raw.c == rat(1));
    // chosen split stays inside the valid weakenings of the raw product
    CHECK(s.h3.a + s.h3.b <= s.h3_raw.a + s.h3_raw.b);
    CHECK(s.h3.sum() <= s.h3_raw.sum());
}

TEST_CASE("interior seed sources match the first-cycle displays") {
    SourceTriple s = assemble_sources(interior_seed(), cfg());
    // H1 = <u>^(1/2) <r>^(-2-s) <t>^-1
    CHECK(s.h1 == SourceBound(rat(2) + sigma, rat(1), rat(-1, 2), SourceKind::plain));
    // H2 = <r>^(-1-s) * phi, differentiating to <r>^(-1-s) <t>^-1 <u>^(-1/2)
    CHECK(s.h2.a == rat(1) + sigma);
    CHECK(s.h2.b == rat(1));
    CHECK(s.h2.c == rat(-1, 2));
    SourceBound d = time_differentiated(s.h2);
    CHECK(d.c == rat(1, 2));
    // H3 raw = <r>^-2 <t>^-1; the chosen split lifts sigma of t-weight onto r
    CHECK(s.h3_raw == SourceBound(rat(2), rat(1), rat(0), SourceKind::null_form));
    CHECK(s.h3 == SourceBound(rat(2) + sigma, rat(1) - sigma, rat(0), SourceKind::null_form));
}

TEST_CASE("exterior phase-boundary sources") {
    BoundState st;
    st.phi = DecayBound(Region::exterior, rat(1), rat(0), rat(0), rat(0));
    st.dphi = DecayBound(Region::exterior, rat(1), rat(0), rat(1), rat(0));
    st.dbar_phi = DecayBound(Region::exterior, rat(2), rat(0), rat(0), rat(0));
    SourceTriple s = assemble_sources(st, cfg());
    CHECK(s.h1 == SourceBound(rat(3) + sigma, rat(0), rat(0), SourceKind::plain));
    CHECK(s.h2.a == rat(2) + sigma);
    CHECK(s.h2.c == rat(0));
    CHECK(s.h3_raw.a == rat(3));
    CHECK(s.h3_raw.c == rat(1));
}

TEST_CASE("channel conversions at the seeds take the expected values") {
    auto c1 = detail::best_plain_conversion(
        SourceBound(rat(5, 2) + sigma, rat(0), rat(0)), Region::exterior, cfg());
    REQUIRE(c1.has_value());
    CHECK(c1->output == DecayBound(Region::exterior, rat(1, 2) + sigma, rat(0), rat(0), rat(0)));
    CHECK_FALSE(c1->relaxed);

    // interior first cycle: all three channels land on <r>^-1 <u>^(1/2-s) or
    // stronger, the join being exactly <r>^-1 <u>^(1/2-s)
    auto i1 = detail::best_plain_conversion(
        SourceBound(rat(2) + sigma, rat(1), rat(-1, 2)), Region::interior, cfg());
    REQUIRE(i1.has_value());
    CHECK(i1->output == DecayBound(Region::interior, rat(1), rat(0), sigma - rat(1, 2), rat(0)));

    auto i2 = detail::best_dt_conversion(SourceBound(rat(1) + sigma, rat(1), rat(-1, 2),
                                                     SourceKind::time_derivative),
                                         Region::interior, cfg(), true);
    REQUIRE(i2.has_value());
    CHECK(i2->output == DecayBound(Region::interior, rat(1), rat(0), sigma - rat(1, 2), rat(0)));

    auto i3 = detail::best_plain_conversion(SourceBound(rat(2), rat(1), rat(0)),
                                            Region::interior, cfg());
    REQUIRE(i3.has_value());
    // formula output: one factor stronger in u than the face-value reading
    CHECK(i3->output == DecayBound(Region::interior, rat(1), rat(0), rat(0), rat(0)));
}

TEST_CASE("no admissible split raises") {
    BoundState st;
    st.phi = DecayBound(Region::exterior, rat(1, 2), rat(0), rat(0), rat(0));
    st.dphi = DecayBound(Region::exterior, rat(1, 2), rat(0), rat(0), rat(0));
    st.dbar_phi = DecayBound(Region::exterior, rat(1, 2), rat(0), rat(0), rat(0));
    CHECK_THROWS_AS(assemble_sources(st, cfg()), Error);
}

TEST_CASE("envelope products refuse mixed regions and nu weights") {
    DecayBound x(Region::exterior, rat(1), rat(0), rat(0), rat(0));
    DecayBound y(Region::interior, rat(1), rat(0), rat(0), rat(0));
    CHECK_THROWS_AS(detail::envelope_product(x, y), Error);
    DecayBound z(Region::interior, rat(1), rat(0), rat(0), rat(1));
    CHECK_THROWS_AS(detail::envelope_product(y, z), Error);
}
