#pragma once

#include "wavedecay/decay.hpp"
#include "wavedecay/fitting.hpp"

namespace wavedecay {

// Numerical double integral of
//   rho * <rho>^-a <s+rho>^-b <s-rho>^-c
// over the backward-cone domain
//   D_tr = { (rho,s) in R+^2 : -(t+r) <= s-rho <= t-r, |t-r| <= s+rho <= t+r },
// by midpoint quadrature in log-graded null coordinates (s-rho, s+rho) at the
// given resolution, divided by r.  An upper-bound proxy for the converted
// field bound, used to cross-check rule outputs by fitting its decay along
// rays.  The grading in s-rho resolves the near-cone weight peak that a
// uniform mesh smears out once c > 1.
double quadrature_oracle(const SourceBound& src, double t, double r, int resolution);

// Centered time difference of the same integral: the proxy for a source
// entering under a time derivative, whose decay is carried by the moving
// domain edges rather than the bulk.
double quadrature_oracle_dt(const SourceBound& src, double t, double r, int resolution);

// Fitted decay exponents of the oracle along proportional rays r = ray * t,
// t in {base, 2*base, 4*base}:
//  * radial slope: log(oracle) against log r, compared to -a' for a pure
//    radial output <r>^-a'.
//  * u slope: log(oracle * <r>) against log<u>, compared to -c' for an
//    output <r>^-1 <u>^-c'.
double oracle_radial_slope(const SourceBound& src, double ray, double base, int resolution);
double oracle_u_slope(const SourceBound& src, double ray, double base, int resolution);
double oracle_u_slope_dt(const SourceBound& src, double ray, double base, int resolution);

// Cross-check of one recorded rule application: fits the oracle along the
// ray appropriate to the branch and reports the fitted and claimed
// exponents.  `sharp` is false for the capped near-cone branch in the
// exterior (u-weight above the critical value is deliberately not consumed
// there), where the integral decays at least as fast as the claim but not
// at the same rate; such applications admit a one-sided check only.
struct OracleCheck {
    double fitted = 0.0;
    double expected = 0.0;
    bool sharp = true;
};
OracleCheck oracle_check(const RuleApplication& app, double base = 400.0, int resolution = 256);

}  // namespace wavedecay
