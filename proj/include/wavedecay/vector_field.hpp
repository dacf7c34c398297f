#pragma once

#include <string>
#include <vector>

#include "wavedecay/solver.hpp"

namespace wavedecay {

// Commuting vector fields available on radial trajectories: translations and
// the scaling field S = t dt + r dr.  Rotations are identically zero on
// radial fields and are rejected.
enum class VectorField { dt, dr, scaling };

using VFWord = std::vector<VectorField>;

// Parses words like "", "t", "tr", "S", "tS"; the letter 'O' (rotation)
// raises Error(radial_symmetry).
VFWord parse_word(const std::string& letters);
std::string word_name(const VFWord& word);

// Point evaluator for Z^word phi by centered differences on the snapshot
// grid; the base time derivative uses the stored dt-phi field.  Evaluation
// must stay margin() away from the recorded boundary (Error(domain_error)
// otherwise).
class FieldEval {
  public:
    FieldEval(const Trajectory& traj, VFWord word);

    double at(int snap, int cell) const;
    int snap_margin() const { return snap_margin_; }
    int cell_margin() const { return cell_margin_; }
    const Trajectory& trajectory() const { return *traj_; }

  private:
    double eval(std::size_t depth, int snap, int cell) const;
    const Trajectory* traj_;
    VFWord word_;
    int snap_margin_ = 0;
    int cell_margin_ = 0;
};

// Materialized slice of Z^word phi over every valid grid point.
struct FieldSlice {
    VFWord word;
    int snap_begin = 0;            // margins trimmed
    int cell_begin = 0;
    std::vector<double> times;
    std::vector<std::vector<double>> values;  // [snapshot][cell - cell_begin]
};

// |word| <= 2; requires enough snapshots/cells for the stencils.
FieldSlice apply_vector_field(const Trajectory& traj, const VFWord& word);

}  // namespace wavedecay
