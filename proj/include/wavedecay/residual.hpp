#pragma once

#include "wavedecay/solver.hpp"

namespace wavedecay {

// Maximum over interior grid points of |discrete P phi - Q(d phi, d phi)|,
// with fourth-order stencils (one order finer than the scheme's).  Needs a
// stride-one recording and at least five snapshots.
double residual_norm(const Trajectory& traj);

}  // namespace wavedecay
