#pragma once

#include <vector>

#include "wavedecay/profiles.hpp"

namespace wavedecay {

// Time-indexed radial snapshots of (phi, dt phi).  Snapshot times are spaced
// record_stride * dt; immutable after construction and safe to share
// read-only.
struct Trajectory {
    SimConfig config;
    std::vector<double> times;
    std::vector<std::vector<double>> phi;  // [snapshot][grid point]
    std::vector<std::vector<double>> pi;   // dt phi, same layout

    int n_points() const { return config.grid.n_cells + 1; }
    double dr() const { return config.grid.dr(); }
    double r(int j) const { return j * dr(); }
    double snap_dt() const { return config.grid.dt() * config.record_stride; }
    int n_snaps() const { return static_cast<int>(times.size()); }

    // index of the snapshot nearest to time t
    int snap_at(double t) const;
};

// Closed-form solution of the flat radial wave equation with the given data
// (strong Huygens holds: the interior of the light cone empties once the
// data's support has passed).
double free_wave_exact(const InitialData& data, double t, double r);

// Leapfrog evolution of psi = r*phi through t_final.  Throws BlowupError
// once max|phi| exceeds 10^3 * epsilon (expected only for the square-dt
// contrast runs) and Error(config_error) on invalid configs.
Trajectory evolve(const SimConfig& config);

}  // namespace wavedecay
