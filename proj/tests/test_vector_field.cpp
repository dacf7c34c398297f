#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "wavedecay/errors.hpp"
#include "wavedecay/vector_field.hpp"

using namespace wavedecay;

namespace {

// synthetic trajectory phi(t, r) = f(t, r) with exact dt-phi
template <typename F, typename G>
Trajectory synthetic(F f, G ft, int n_snaps, int n_points, double dt, double dr) {
    Trajectory traj;
    traj.config.grid.n_cells = n_points - 1;
    traj.config.grid.r_max = (n_points - 1) * dr;
    traj.config.grid.cfl = dt / dr;
    traj.config.record_stride = 1;
    traj.config.t_final = (n_snaps - 1) * dt;
    for (int i = 0; i < n_snaps; ++i) {
        double t = i * dt;
        traj.times.push_back(t);
        std::vector<double> phi(n_points), pi(n_points);
        for (int j = 0; j < n_points; ++j) {
            phi[j] = f(t, j * dr);
            pi[j] = ft(t, j * dr);
        }
        traj.phi.push_back(std::move(phi));
        traj.pi.push_back(std::move(pi));
    }
    return traj;
}

}  // namespace

TEST_CASE("word parsing") {
    CHECK(parse_word("").empty());
    CHECK(parse_word("tr") == VFWord{VectorField::dt, VectorField::dr});
    CHECK(parse_word("S") == VFWord{VectorField::scaling});
    CHECK(word_name(parse_word("tS")) == "tS");
    CHECK_THROWS_AS(parse_word("O"), Error);
    CHECK_THROWS_AS(parse_word("x"), Error);
}

TEST_CASE("identity word returns the field") {
    auto traj = synthetic([](double t, double r) { return t * t + r; },
                          [](double t, double) { return 2.0 * t; }, 5, 9, 0.1, 0.1);
    FieldSlice s = apply_vector_field(traj, {});
    CHECK(s.values[2][3] == doctest::Approx(0.2 * 0.2 + 0.3));
}

TEST_CASE("scaling annihilates degree-one time homogeneity up to itself") {
    // f(t, r) = t has S f = t * 1 + r * 0 = t = f
    auto traj = synthetic([](double t, double) { return t; },
                          [](double, double) { return 1.0; }, 6, 9, 0.25, 0.5);
    FieldEval ev(traj, parse_word("S"));
    for (int i = 0; i < 6; ++i)
        for (int j = 1; j < 8; ++j)
            CHECK(ev.at(i, j) == doctest::Approx(traj.times[i]).epsilon(1e-12));
}

TEST_CASE("second time derivative uses the stored velocity plus one stencil") {
    auto traj = synthetic([](double t, double r) { return std::sin(t) * std::cos(r); },
                          [](double t, double r) { return std::cos(t) * std::cos(r); }, 21,
                          33, 0.05, 0.1);
    FieldEval ev(traj, parse_word("tt"));
    double got = ev.at(10, 8);
    double want = -std::sin(0.5) * std::cos(0.8);
    CHECK(got == doctest::Approx(want).epsilon(1e-2));
}

TEST_CASE("mixed and radial words against analytic derivatives") {
    auto traj = synthetic([](double t, double r) { return t * r * r; },
                          [](double, double r) { return r * r; }, 9, 17, 0.125, 0.25);
    // dr: 2 t r
    FieldEval dr_ev(traj, parse_word("r"));
    CHECK(dr_ev.at(4, 8) == doctest::Approx(2.0 * 0.5 * 2.0).epsilon(1e-10));
    // dt dr: 2 r
    FieldEval tr_ev(traj, parse_word("tr"));
    CHECK(tr_ev.at(4, 8) == doctest::Approx(2.0 * 2.0).epsilon(1e-10));
    // S: t*(r^2) + r*(2 t r) = 3 t r^2
    FieldEval s_ev(traj, parse_word("S"));
    CHECK(s_ev.at(4, 8) == doctest::Approx(3.0 * 0.5 * 4.0).epsilon(1e-10));
}

TEST_CASE("margins are enforced") {
    auto traj = synthetic([](double t, double r) { return t + r; },
                          [](double, double) { return 1.0; }, 5, 9, 0.1, 0.1);
    FieldEval ev(traj, parse_word("SS"));
    CHECK(ev.snap_margin() == 1);
    CHECK(ev.cell_margin() == 2);
    CHECK_THROWS_AS(ev.at(0, 4), Error);
    CHECK_THROWS_AS(ev.at(2, 8), Error);
    CHECK_NOTHROW(ev.at(2, 4));
    CHECK_THROWS_AS(FieldEval(traj, parse_word("ttt")), Error);
}
