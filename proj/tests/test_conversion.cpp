#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <vector>

#include "wavedecay/conversion.hpp"
#include "wavedecay/errors.hpp"

using namespace wavedecay;

namespace {
const Rational sigma = rat(1, 10);

bool throws_code(Errc code, const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code() == code;
    }
    return false;
}
}  // namespace

TEST_CASE("eta shift branches") {
    CHECK(eta_shift(rat(-1, 2)) == rat(-5, 2));
    CHECK(eta_shift(rat(2)) == rat(-1));
    CHECK(throws_code(Errc::boundary_eta, [] { eta_shift(rat(1)); }));
    CHECK(throws_code(Errc::rule_domain, [] { eta_shift(rat(-3, 4)); }));
}

TEST_CASE("interior conversion") {
    // (2+s, 1, -1/2) -> <r>^-1 <u>^(1/2-s), i.e. c' = s - 1/2 = -2/5
    DecayBound b = apply_interior_conversion({rat(2) + sigma, rat(1), rat(-1, 2)});
    CHECK(b == DecayBound(Region::interior, rat(1), rat(0), rat(-2, 5), rat(0)));

    // (5/2, 1/2, s) -> c' = 1/10
    b = apply_interior_conversion({rat(5, 2), rat(1, 2), sigma});
    CHECK(b == DecayBound(Region::interior, rat(1), rat(0), rat(1, 10), rat(0)));

    // (2+s, 1, 2): second shift branch, c' = 1 + s
    b = apply_interior_conversion({rat(2) + sigma, rat(1), rat(2)});
    CHECK(b == DecayBound(Region::interior, rat(1), rat(0), rat(11, 10), rat(0)));

    CHECK(throws_code(Errc::rule_domain,
                      [] { apply_interior_conversion({rat(2), rat(1), rat(0)}); }));
    CHECK(throws_code(Errc::rule_domain,
                      [] { apply_interior_conversion({rat(3), rat(1), rat(0)}); }));
    CHECK(throws_code(Errc::rule_domain,
                      [] { apply_interior_conversion({rat(5, 2), rat(-1), rat(0)}); }));
    CHECK(throws_code(Errc::rule_domain,
                      [] { apply_interior_conversion({rat(5, 2), rat(0), rat(-1)}); }));
    CHECK(throws_code(Errc::boundary_eta,
                      [] { apply_interior_conversion({rat(5, 2), rat(0), rat(1)}); }));
}

TEST_CASE("exterior conversion branches by the exponent sum") {
    // (5/2+s, 0, 0): sum 13/5 < 3 -> r^-(1/2+s)
    DecayBound b = apply_exterior_conversion({rat(5, 2) + sigma, rat(0), rat(0)});
    CHECK(b == DecayBound(Region::exterior, rat(3, 5), rat(0), rat(0), rat(0)));

    // (2+s, 0, 1/2): sum < 3 -> r^-(1/2+s)
    b = apply_exterior_conversion({rat(2) + sigma, rat(0), rat(1, 2)});
    CHECK(b == DecayBound(Region::exterior, rat(3, 5), rat(0), rat(0), rat(0)));

    // (2+s, 1, 0): sum 31/10 > 3 -> <r>^-1 <u>^-s
    b = apply_exterior_conversion({rat(2) + sigma, rat(1), rat(0)});
    CHECK(b == DecayBound(Region::exterior, rat(1), rat(0), rat(1, 10), rat(0)));

    CHECK(throws_code(Errc::borderline_sum,
                      [] { apply_exterior_conversion({rat(5, 2), rat(0), rat(1, 2)}); }));
    CHECK(throws_code(Errc::rule_domain,
                      [] { apply_exterior_conversion({rat(2), rat(0), rat(1, 2)}); }));
}

TEST_CASE("time-derivative conversion") {
    SourceBound td(rat(2) + sigma, rat(0), rat(0), SourceKind::time_derivative);
    DecayBound b = apply_dt_conversion(td);
    CHECK(b == DecayBound(Region::interior, rat(1), rat(0), rat(1, 10), rat(0)));

    SourceBound td2(rat(2) + sigma, rat(0), rat(1, 2), SourceKind::time_derivative);
    b = apply_dt_conversion(td2);
    CHECK(b == DecayBound(Region::interior, rat(1), rat(0), rat(3, 5), rat(0)));

    SourceBound td3(rat(2) + sigma, rat(0), rat(1), SourceKind::time_derivative);
    CHECK(throws_code(Errc::boundary_eta, [&] { apply_dt_conversion(td3); }));

    SourceBound plain(rat(2) + sigma, rat(0), rat(0), SourceKind::plain);
    CHECK(throws_code(Errc::rule_domain, [&] { apply_dt_conversion(plain); }));

    // the exterior sub-3 case is deliberately absent
    CHECK(throws_code(Errc::unsupported,
                      [&] { apply_dt_conversion(td, Region::exterior); }));
    // exterior case above the threshold works (second shift branch)
    SourceBound td4(rat(2) + sigma, rat(0), rat(3, 2), SourceKind::time_derivative);
    b = apply_dt_conversion(td4, Region::exterior);
    CHECK(b == DecayBound(Region::exterior, rat(1), rat(0), rat(11, 10), rat(0)));
}

TEST_CASE("derivative gain appends one nu power") {
    BoundState s;
    s.phi = DecayBound(Region::interior, rat(1), rat(0), rat(1, 2), rat(0));
    DecayBound d = derivative_gain(s);
    CHECK(d == DecayBound(Region::interior, rat(1), rat(0), rat(1, 2), rat(1)));

    // interior b-weight case: same (a,b,c), nu_pow = 1
    s.phi = DecayBound(Region::interior, rat(0), rat(1), rat(-2, 5), rat(0));
    d = derivative_gain(s);
    CHECK(d == DecayBound(Region::interior, rat(0), rat(1), rat(-2, 5), rat(1)));

    // constant bound -> pure nu^-1
    s.phi = DecayBound(Region::exterior, rat(0), rat(0), rat(0), rat(0));
    d = derivative_gain(s);
    CHECK(d.nu_pow == rat(1));
    // in the exterior nu = <u>, so canonically this is one u power
    CHECK(canonicalize(d) == DecayBound(Region::exterior, rat(0), rat(0), rat(1), rat(0)));

    s.phi.nu_pow = rat(1);
    CHECK_THROWS_AS(derivative_gain(s), Error);
}

TEST_CASE("tangential bound") {
    // exterior sharp seed: phi = <u>^(1/2)/<r>, dphi = <r>^-1 <u>^(-1/2)
    BoundState s;
    s.phi = DecayBound(Region::exterior, rat(1), rat(0), rat(-1, 2), rat(0));
    s.dphi = DecayBound(Region::exterior, rat(1), rat(0), rat(1, 2), rat(0));
    CHECK(tangential_bound(s) ==
          DecayBound(Region::exterior, rat(2), rat(0), rat(-1, 2), rat(0)));

    // interior seed: phi = <u>^(1/2)/<t>, dphi = <r>^-1 <u>^(-1/2)
    s.phi = DecayBound(Region::interior, rat(0), rat(1), rat(-1, 2), rat(0));
    s.dphi = DecayBound(Region::interior, rat(1), rat(0), rat(1, 2), rat(0));
    CHECK(tangential_bound(s) ==
          DecayBound(Region::interior, rat(1), rat(1), rat(-1, 2), rat(0)));

    // exterior phase boundary: phi = <r>^-1, dphi = <r>^-1 <u>^-1 -> <r>^-2
    s.phi = DecayBound(Region::exterior, rat(1), rat(0), rat(0), rat(0));
    s.dphi = DecayBound(Region::exterior, rat(1), rat(0), rat(1), rat(0));
    CHECK(tangential_bound(s) == DecayBound(Region::exterior, rat(2), rat(0), rat(0), rat(0)));
}

TEST_CASE("radial-to-time conversion") {
    EngineConfig cfg = EngineConfig::defaults_for(sigma);

    // q = s - 1/2: <r>^-1 <u>^(1/2-s) -> <t>^-1 <u>^(1/2-s)
    DecayBound phi(Region::interior, rat(1), rat(0), rat(-2, 5), rat(0));
    DecayBound dphi(Region::interior, rat(1), rat(0), rat(1, 2), rat(0));
    CHECK(convert_r_to_t(phi, dphi, cfg) ==
          DecayBound(Region::interior, rat(0), rat(1), rat(-2, 5), rat(0)));

    // q = 1 endpoint
    phi = DecayBound(Region::interior, rat(1), rat(0), rat(1), rat(0));
    dphi = DecayBound(Region::interior, rat(1), rat(0), rat(19, 10), rat(0));
    CHECK(convert_r_to_t(phi, dphi, cfg) ==
          DecayBound(Region::interior, rat(0), rat(1), rat(1), rat(0)));

    // q = -1/2 exactly is accepted (since -1/2 > -1 + 2s)
    phi = DecayBound(Region::interior, rat(1), rat(0), rat(-1, 2), rat(0));
    dphi = DecayBound(Region::interior, rat(1), rat(0), rat(2, 5), rat(0));
    CHECK(convert_r_to_t(phi, dphi, cfg) ==
          DecayBound(Region::interior, rat(0), rat(1), rat(-1, 2), rat(0)));

    // too-weak derivative control is rejected
    dphi = DecayBound(Region::interior, rat(1), rat(0), rat(0), rat(0));
    phi = DecayBound(Region::interior, rat(1), rat(0), rat(1, 2), rat(0));
    CHECK(throws_code(Errc::rule_domain, [&] { convert_r_to_t(phi, dphi, cfg); }));

    // q below -1/2 is rejected
    phi = DecayBound(Region::interior, rat(1), rat(0), rat(-3, 5), rat(0));
    dphi = DecayBound(Region::interior, rat(1), rat(0), rat(1), rat(0));
    CHECK(throws_code(Errc::rule_domain, [&] { convert_r_to_t(phi, dphi, cfg); }));
}

TEST_CASE("strengthening a source never weakens a conversion output") {
    // grid of admissible interior/exterior triples, bumped componentwise
    std::vector<Rational> as{rat(21, 10), rat(23, 10), rat(27, 10)};
    std::vector<Rational> bs{rat(0), rat(1, 2), rat(1)};
    std::vector<Rational> cs{rat(-1, 2), rat(0), rat(1, 2), rat(3, 2), rat(2)};
    std::vector<Rational> bumps{rat(1, 10), rat(1, 2)};
    auto ok_interior = [](const SourceBound& s) {
        return s.a > rat(2) && s.a < rat(3) && s.b >= rat(0) && s.c >= rat(-1, 2) &&
               s.c != rat(1);
    };
    for (const auto& a : as)
        for (const auto& b : bs)
            for (const auto& c : cs)
                for (const auto& d : bumps)
                    for (int slot = 0; slot < 3; ++slot) {
                        SourceBound weak(a, b, c);
                        SourceBound strong = weak;
                        (slot == 0 ? strong.a : slot == 1 ? strong.b : strong.c) += d;
                        if (ok_interior(weak) && ok_interior(strong)) {
                            DecayBound ow = apply_interior_conversion(weak);
                            DecayBound os = apply_interior_conversion(strong);
                            CHECK(dominates(os, ow));
                        }
                        if (ok_interior(weak) && ok_interior(strong) &&
                            weak.sum() != rat(3) && strong.sum() != rat(3)) {
                            DecayBound ow = apply_exterior_conversion(weak);
                            DecayBound os = apply_exterior_conversion(strong);
                            CHECK(dominates(os, ow));
                        }
                    }
}
