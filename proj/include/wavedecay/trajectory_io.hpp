#pragma once

#include <string>

#include "wavedecay/solver.hpp"

namespace wavedecay {

// Binary trajectory container: header (magic, endianness tag, canonical
// config text, grid descriptor) followed by contiguous 64-bit float snapshot
// blocks (time, phi values, dt-phi values).  Byte-reproducible for identical
// configs.  A companion "<path>.idx" plain-text file lists snapshot times.
void save_trajectory(const Trajectory& traj, const std::string& path);
Trajectory load_trajectory(const std::string& path);

}  // namespace wavedecay
