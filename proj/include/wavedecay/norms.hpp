#pragma once

#include <string>
#include <vector>

#include "wavedecay/regions.hpp"
#include "wavedecay/vector_field.hpp"

namespace wavedecay {

enum class NormKind { le, le1, lestar, region_sup };

struct NormReport {
    NormKind kind;
    double value = 0.0;
    std::string descriptor;  // region / interval text
};

std::string norm_name(NormKind k);

// Weighted spacetime norms over [t0, t1], discretized on the base-2 annular
// decomposition <r> in [R, 2R) with the spherical measure 4 pi r^2 dr dt:
//   le     sup_R  || <r>^(-1/2) u ||_L2
//   lestar sum_R  || <r>^(+1/2) u ||_L2
//   le1    le of the gradient plus le of <r>^-1 u
NormReport weighted_dyadic_norm(const Trajectory& traj, NormKind kind, double t0, double t1);

// max |Z^word phi| over grid points in the block (Error(empty_region) when
// the block misses the recorded grid).
NormReport region_sup(const Trajectory& traj, const DyadicRegionSpec& region,
                      const VFWord& word);

// Discrete E_order at each snapshot time: running maximum of the gradient
// L2 over all words up to the order, plus the cumulative LE^1 piece.
std::vector<std::pair<double, double>> energy_history(const Trajectory& traj, int order);

}  // namespace wavedecay
