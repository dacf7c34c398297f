#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "wavedecay/errors.hpp"
#include "wavedecay/inequalities.hpp"
#include "wavedecay/profiles.hpp"
#include "wavedecay/vector_field.hpp"

using namespace wavedecay;

namespace {

Trajectory fat_run(double t_final, double dr_inv, double support = 24.0) {
    SimConfig cfg;
    cfg.grid.r_max = t_final + support + 1.0;
    cfg.grid.n_cells = static_cast<int>(cfg.grid.r_max * dr_inv);
    cfg.grid.r_max = cfg.grid.n_cells / dr_inv;  // keep dr exact
    cfg.t_final = t_final;
    cfg.record_stride = 4;
    cfg.nonlinearity = Nonlinearity::null_form;
    cfg.data.profile = DataProfile::inverse_square;
    cfg.data.epsilon = 0.01;
    cfg.data.support_radius = support;
    return evolve(cfg);
}

}  // namespace

TEST_CASE("cone Hardy on a bump straddling the cone is scale stable") {
    // fixed-width profile: both sides then scale like t^2 and the ratio is flat
    SyntheticField f;
    f.value = [](double t, double r) {
        double x = (r - t) / 4.0;
        return std::exp(-x * x);
    };
    f.dr_value = [](double t, double r) {
        double x = (r - t) / 4.0;
        return -0.5 * x * std::exp(-x * x);
    };
    double lo = 1e300, hi = 0.0;
    for (double t : {32.0, 64.0, 128.0}) {
        CheckReport rep = check_cone_hardy(f, t);
        CHECK(rep.ratio > 0.0);
        CHECK(std::isfinite(rep.ratio));
        lo = std::min(lo, rep.ratio);
        hi = std::max(hi, rep.ratio);
    }
    CHECK(hi / lo <= 2.0);
}

TEST_CASE("cone Hardy on a constant band: edge terms carry the bound") {
    SyntheticField f;
    f.value = [](double, double) { return 0.7; };
    f.dr_value = [](double, double) { return 0.0; };
    CheckReport rep = check_cone_hardy(f, 64.0);
    CHECK(rep.lhs > 0.0);
    CHECK(rep.rhs > 0.0);
    CHECK(std::isfinite(rep.ratio));
}

TEST_CASE("u-band Sobolev embedding ratios are bounded across bands") {
    Trajectory traj = fat_run(128.0, 16.0);
    double lo = 1e300, hi = 0.0;
    for (double U : {2.0, 4.0, 8.0}) {
        CheckReport rep = check_sobolev(CheckKind::sobolev_u, traj, 64.0, U);
        CHECK(rep.lhs > 0.0);
        CHECK(rep.rhs > 0.0);
        lo = std::min(lo, rep.ratio);
        hi = std::max(hi, rep.ratio);
    }
    CHECK(hi / lo <= 2.0);
}

TEST_CASE("under-resolved blocks are rejected") {
    Trajectory traj = fat_run(16.0, 4.0);
    CHECK_THROWS_AS(check_sobolev(CheckKind::sobolev_u, traj, 4.0, 2.0), Error);
}

TEST_CASE("zero-input neutrality") {
    SimConfig cfg;
    cfg.grid.r_max = 40.0;
    cfg.grid.n_cells = 1280;
    cfg.t_final = 16.0;
    cfg.record_stride = 4;
    cfg.nonlinearity = Nonlinearity::none;
    cfg.data.epsilon = 0.0;
    cfg.data.support_radius = 6.0;
    Trajectory traj = evolve(cfg);
    CheckReport rep = check_sobolev(CheckKind::sobolev_u, traj, 6.0, 2.0);
    CHECK(rep.lhs == 0.0);
    CheckReport rep2 = check_morawetz_interior(traj, 4.0);
    CHECK(rep2.lhs == 0.0);
}

TEST_CASE("radial identity dr f = (S f)/r - (t/r) dt f holds to differencing order") {
    Trajectory traj = fat_run(16.0, 16.0);
    FieldEval s_ev(traj, parse_word("S"));
    FieldEval t_ev(traj, parse_word("t"));
    FieldEval r_ev(traj, parse_word("r"));
    for (int i = 2; i < traj.n_snaps() - 2; i += 7) {
        double t = traj.times[i];
        for (int j = 16; j < traj.n_points() - 16; j += 97) {
            double r = traj.r(j);
            if (r < traj.dr()) continue;
            double lhs = r_ev.at(i, j);
            double rhs = s_ev.at(i, j) / r - (t / r) * t_ev.at(i, j);
            CHECK(lhs == doctest::Approx(rhs).epsilon(1e-9));
        }
    }
}

TEST_CASE("null covector sampling accepts the metric form and rejects others") {
    CHECK_NOTHROW(NullFormCoeffs::minkowski(1.0));
    CHECK_NOTHROW(NullFormCoeffs::minkowski(-0.3));
    std::array<std::array<double, 4>, 4> s{};
    s[0][1] = s[1][0] = 0.5;
    CHECK_THROWS_AS(NullFormCoeffs{s}, Error);
    std::array<std::array<double, 4>, 4> s2{};
    s2[0][0] = 1.0;  // (dt phi)^2 alone violates the null condition
    CHECK_THROWS_AS(NullFormCoeffs{s2}, Error);
    // null evaluation: null directions annihilate, others do not
    NullFormCoeffs q0 = NullFormCoeffs::minkowski(1.0);
    CHECK(null_form_eval(1.0, 1.0, 0.0, q0) == doctest::Approx(0.0));
    CHECK(null_form_eval(2.0, 1.0, 0.0, q0) == doctest::Approx(-3.0));
}

TEST_CASE("klainerman-sideris pointwise ratios stay uniform across blocks") {
    Trajectory traj = fat_run(128.0, 16.0);
    double lo = 1e300, hi = 0.0;
    for (double T : {32.0, 64.0}) {
        CheckReport rep = check_klainerman_sideris(traj, T, 3.0 * T / 8.0);
        CHECK(std::isfinite(rep.ratio));
        CHECK(rep.ratio > 0.0);
        lo = std::min(lo, rep.ratio);
        hi = std::max(hi, rep.ratio);
    }
    CHECK(hi / lo <= 2.0);
}

TEST_CASE("interior-bulk local-energy check runs and stays finite") {
    Trajectory traj = fat_run(64.0, 16.0);
    CheckReport rep = check_morawetz_interior(traj, 16.0);
    CHECK(rep.lhs > 0.0);
    CHECK(rep.rhs > 0.0);
    CHECK(std::isfinite(rep.ratio));
}

TEST_CASE("far-field dyadic derivative bound runs") {
    Trajectory traj = fat_run(32.0, 16.0);
    CheckReport rep = check_morawetz_dyadic(traj, 8.0, 3.0);
    CHECK(std::isfinite(rep.ratio));
}
