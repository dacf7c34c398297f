#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_support.hpp"
#include "wavedecay/errors.hpp"
#include "wavedecay/iteration.hpp"

using namespace wavedecay;

namespace {
EngineConfig cfg10() { return EngineConfig::defaults_for(rat(1, 10)); }

void check_states_equal(const IterationTrace& got, const IterationTrace& want) {
    REQUIRE(got.states.size() == want.states.size());
    for (std::size_t i = 0; i < got.states.size(); ++i) {
        CAPTURE(i);
        CHECK(got.states[i].phi == want.states[i].phi);
        CHECK(got.states[i].dphi == want.states[i].dphi);
        CHECK(got.states[i].dbar_phi == want.states[i].dbar_phi);
    }
}
}  // namespace

TEST_CASE("exterior chain reproduces the golden trace at sigma = 1/10") {
    IterationTrace t = run_exterior_iteration(cfg10());
    CHECK(t.terminated);
    IterationTrace golden = trace_from_text(
        testsup::read_file(testsup::source_dir() + "/data/golden/exterior_sigma_1_10.trace"));
    check_states_equal(t, golden);
    // byte-exact serialization against the stored file
    CHECK(trace_to_text(t) ==
          testsup::read_file(testsup::source_dir() + "/data/golden/exterior_sigma_1_10.trace"));

    // radial phase is exactly floor(1/(2 sigma)) = 5 steps long
    int first_full_radial = -1;
    for (std::size_t i = 0; i < t.states.size(); ++i)
        if (t.states[i].phi.a == rat(1)) {
            first_full_radial = static_cast<int>(i);
            break;
        }
    CHECK(first_full_radial == 5);
    // fixed point <r>^-1 <u>^-1
    CHECK(t.fixed_point.phi == DecayBound(Region::exterior, rat(1), rat(0), rat(1), rat(0)));
}

TEST_CASE("interior chain reproduces the golden trace at sigma = 1/10") {
    EngineConfig cfg = cfg10();
    IterationTrace ext = run_exterior_iteration(cfg);
    IterationTrace t = run_interior_iteration(cfg, ext);
    CHECK(t.terminated);
    IterationTrace golden = trace_from_text(
        testsup::read_file(testsup::source_dir() + "/data/golden/interior_sigma_1_10.trace"));
    check_states_equal(t, golden);
    CHECK(trace_to_text(t) ==
          testsup::read_file(testsup::source_dir() + "/data/golden/interior_sigma_1_10.trace"));
    CHECK(t.fixed_point.phi == DecayBound(Region::interior, rat(0), rat(1), rat(1), rat(0)));
    // the derivative rule takes over for the cone source as soon as its
    // hypothesis is available
    CHECK(t.dt_rule_switch_step >= 1);
    // the face-value/formula discrepancy of the first cycle is flagged
    bool flagged = false;
    for (const auto& n : t.notes) flagged |= n.find("step 1 channel 3") != std::string::npos;
    CHECK(flagged);
}

TEST_CASE("interior chain requires the exterior fixed point") {
    EngineConfig cfg = cfg10();
    IterationTrace bogus;
    bogus.terminated = false;
    CHECK_THROWS_AS(run_interior_iteration(cfg, bogus), Error);
    bogus.terminated = true;
    bogus.fixed_point.phi = DecayBound(Region::exterior, rat(1), rat(0), rat(0), rat(0));
    CHECK_THROWS_AS(run_interior_iteration(cfg, bogus), Error);
}

TEST_CASE("successive field bounds strengthen strictly until termination") {
    IterationTrace t = run_exterior_iteration(cfg10());
    for (std::size_t i = 1; i < t.states.size(); ++i) {
        CHECK(dominates(t.states[i].phi, t.states[i - 1].phi));
        CHECK(t.states[i].phi != t.states[i - 1].phi);
    }
}

TEST_CASE("termination within 4*ceil(1/sigma) steps for the sigma family") {
    for (std::int64_t k : {6, 10, 14, 22}) {
        CAPTURE(k);
        EngineConfig cfg = EngineConfig::defaults_for(rat(1, k));
        IterationTrace ext = run_exterior_iteration(cfg);
        CHECK(ext.terminated);
        CHECK(static_cast<int>(ext.states.size()) - 1 <= cfg.max_steps);
        CHECK(ext.fixed_point.phi ==
              DecayBound(Region::exterior, rat(1), rat(0), rat(1), rat(0)));
        IterationTrace in = run_interior_iteration(cfg, ext);
        CHECK(in.terminated);
        CHECK(static_cast<int>(in.states.size()) - 1 <= cfg.max_steps);
        CHECK(in.fixed_point.phi ==
              DecayBound(Region::interior, rat(0), rat(1), rat(1), rat(0)));
    }
}

TEST_CASE("interior phase lengths at sigma = 1/10 match the displays") {
    EngineConfig cfg = cfg10();
    IterationTrace ext = run_exterior_iteration(cfg);
    IterationTrace t = run_interior_iteration(cfg, ext);
    // after floor(1/(2 sigma)) = 5 cycles the time-decay bound has shed its
    // u growth entirely
    REQUIRE(t.states.size() > 5);
    CHECK(t.states[5].phi == DecayBound(Region::interior, rat(0), rat(1), rat(0), rat(0)));
    CHECK(t.states[5].dphi == DecayBound(Region::interior, rat(1), rat(0), rat(1), rat(0)));
    CHECK(t.states[5].dbar_phi == DecayBound(Region::interior, rat(1), rat(1), rat(0), rat(0)));
}

TEST_CASE("phase-2 null-channel u-exponent saturates at one") {
    IterationTrace t = run_exterior_iteration(cfg10());
    for (const auto& app : t.rule_log) {
        if (app.channel != 3) continue;
        if (app.step <= 5) continue;  // radial phase
        CHECK(canonicalize(app.output).c <= rat(1));
    }
    // and it reaches exactly one once past the phase boundary
    bool saturated = false;
    for (const auto& app : t.rule_log)
        if (app.channel == 3 && app.step > 6)
            saturated |= canonicalize(app.output).c == rat(1);
    CHECK(saturated);
}

TEST_CASE("a too-small step cap raises instead of looping") {
    EngineConfig cfg = cfg10();
    cfg.max_steps = 3;
    CHECK_THROWS_AS(run_exterior_iteration(cfg), Error);
}

TEST_CASE("trace serialization round trip and parse errors") {
    IterationTrace t = run_exterior_iteration(cfg10());
    std::string text = trace_to_text(t);
    IterationTrace back = trace_from_text(text);
    REQUIRE(back.states.size() == t.states.size());
    for (std::size_t i = 0; i < t.states.size(); ++i) {
        CHECK(back.states[i].phi == t.states[i].phi);
        CHECK(back.states[i].dphi == t.states[i].dphi);
        CHECK(back.states[i].dbar_phi == t.states[i].dbar_phi);
    }
    CHECK_THROWS_AS(trace_from_text(""), Error);
    CHECK_THROWS_AS(trace_from_text("step=0 region=exterior phi=(1,0) dphi=(1,0,0,0)"), Error);
}

TEST_CASE("determinism: two runs serialize identically") {
    EngineConfig cfg = cfg10();
    CHECK(trace_to_text(run_exterior_iteration(cfg)) ==
          trace_to_text(run_exterior_iteration(cfg)));
}
