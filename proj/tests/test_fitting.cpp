#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "wavedecay/errors.hpp"
#include "wavedecay/fitting.hpp"

using namespace wavedecay;

TEST_CASE("exact power law recovers the exponent exactly") {
    std::vector<std::pair<double, double>> samples;
    for (double T : {8.0, 16.0, 32.0, 64.0}) samples.emplace_back(T, 7.0 / T);
    FitResult r = fit_decay_exponents(samples);
    CHECK(r.slope == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(r.residual < 1e-10);
    CHECK(r.sample_count == 4);
    CHECK(std::exp(r.intercept) == doctest::Approx(7.0));
}

TEST_CASE("log-periodic wobble stays within the advertised band") {
    std::vector<std::pair<double, double>> samples;
    for (double T : {8.0, 16.0, 32.0, 64.0, 128.0})
        samples.emplace_back(T, (1.0 + 0.05 * std::sin(std::log(T))) / T);
    FitResult r = fit_decay_exponents(samples);
    CHECK(std::abs(r.slope - (-1.0)) < 0.06);
}

TEST_CASE("input validation") {
    std::vector<std::pair<double, double>> two{{1.0, 1.0}, {2.0, 0.5}};
    CHECK_THROWS_AS(fit_decay_exponents(two), Error);
    std::vector<std::pair<double, double>> neg{{1.0, 1.0}, {2.0, -0.5}, {4.0, 0.25}};
    CHECK_THROWS_AS(fit_decay_exponents(neg), Error);
    std::vector<std::pair<double, double>> same{{2.0, 1.0}, {2.0, 0.5}, {2.0, 0.25}};
    CHECK_THROWS_AS(fit_decay_exponents(same), Error);
}
