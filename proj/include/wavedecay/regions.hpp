#pragma once

#include <string>

#include "wavedecay/solver.hpp"

namespace wavedecay {

// Dyadic spacetime blocks.  T runs over powers of 2, the secondary scale
// over powers of 4; the 3T/8 caps are enforced by the constructor.
//
//   ctr           C_T^R:   T <= t <= 2T, r <= t, R < r < 2R    (R=1: r < 2)
//   ctu           C_T^U:   T <= t <= 2T, U < |t-r| < 2U        (U=1: |t-r| < 2)
//   crt           C_R^T:   r >= t, T <= t <= 2T, R <= r <= 2R, R <= |r-t| <= 2R
//   crr           C_R^R:   1 <= t <= R, R <= r <= 2R, R/2 <= |r-t| <= 2R
//   annulus       A_R:     R <= <r> <= 2R (no time restriction)
//   interior_bulk C_T^{<3T/4}: T <= t <= 2T, r <= t, r < 3T/4
enum class RegionKind { ctr, ctu, crt, crr, annulus, interior_bulk };

struct DyadicRegionSpec {
    RegionKind kind;
    double T = 1.0;
    double scale2 = 1.0;  // R or U where applicable

    DyadicRegionSpec(RegionKind k, double t_scale, double second = 1.0);

    bool contains(double t, double r) const;
    std::string str() const;
};

}  // namespace wavedecay
