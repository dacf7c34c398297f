#include "wavedecay/vector_field.hpp"

#include "wavedecay/errors.hpp"

namespace wavedecay {

VFWord parse_word(const std::string& letters) {
    VFWord w;
    for (char c : letters) {
        switch (c) {
            case 't': w.push_back(VectorField::dt); break;
            case 'r': w.push_back(VectorField::dr); break;
            case 'S': w.push_back(VectorField::scaling); break;
            case 'O':
                throw Error(Errc::radial_symmetry,
                            "rotations vanish identically on radial fields");
            default:
                throw Error(Errc::domain_error, std::string("unknown field letter: ") + c);
        }
    }
    return w;
}

std::string word_name(const VFWord& word) {
    if (word.empty()) return "id";
    std::string s;
    for (auto v : word)
        s += v == VectorField::dt ? 't' : v == VectorField::dr ? 'r' : 'S';
    return s;
}

FieldEval::FieldEval(const Trajectory& traj, VFWord word)
    : traj_(&traj), word_(std::move(word)) {
    if (word_.size() > 2)
        throw Error(Errc::domain_error, "vector-field words are limited to two letters");
    // margins: each letter costs one stencil layer on its axis, except the
    // innermost time derivative which reads the stored field
    for (std::size_t i = 0; i < word_.size(); ++i) {
        bool innermost = i + 1 == word_.size();
        switch (word_[i]) {
            case VectorField::dt:
                if (!innermost) ++snap_margin_;
                break;
            case VectorField::dr:
                ++cell_margin_;
                break;
            case VectorField::scaling:
                if (!innermost) ++snap_margin_;
                ++cell_margin_;
                break;
        }
    }
}

double FieldEval::eval(std::size_t depth, int snap, int cell) const {
    const Trajectory& t = *traj_;
    if (depth == word_.size()) return t.phi[snap][cell];
    bool innermost = depth + 1 == word_.size();
    switch (word_[depth]) {
        case VectorField::dt:
            if (innermost) return t.pi[snap][cell];
            return (eval(depth + 1, snap + 1, cell) - eval(depth + 1, snap - 1, cell)) /
                   (t.times[snap + 1] - t.times[snap - 1]);
        case VectorField::dr:
            return (eval(depth + 1, snap, cell + 1) - eval(depth + 1, snap, cell - 1)) /
                   (2.0 * t.dr());
        case VectorField::scaling: {
            double dt_part = innermost
                                 ? t.pi[snap][cell]
                                 : (eval(depth + 1, snap + 1, cell) -
                                    eval(depth + 1, snap - 1, cell)) /
                                       (t.times[snap + 1] - t.times[snap - 1]);
            double dr_part = (eval(depth + 1, snap, cell + 1) -
                              eval(depth + 1, snap, cell - 1)) /
                             (2.0 * t.dr());
            return t.times[snap] * dt_part + t.r(cell) * dr_part;
        }
    }
    return 0.0;
}

double FieldEval::at(int snap, int cell) const {
    const Trajectory& t = *traj_;
    if (snap < snap_margin_ || snap >= t.n_snaps() - snap_margin_ || cell < cell_margin_ ||
        cell >= t.n_points() - cell_margin_)
        throw Error(Errc::domain_error, "evaluation point too close to the recorded boundary");
    return eval(0, snap, cell);
}

FieldSlice apply_vector_field(const Trajectory& traj, const VFWord& word) {
    FieldEval ev(traj, word);
    if (traj.n_snaps() <= 2 * ev.snap_margin() || traj.n_points() <= 2 * ev.cell_margin())
        throw Error(Errc::domain_error, "trajectory too small for the requested word");
    FieldSlice slice;
    slice.word = word;
    slice.snap_begin = ev.snap_margin();
    slice.cell_begin = ev.cell_margin();
    for (int i = ev.snap_margin(); i < traj.n_snaps() - ev.snap_margin(); ++i) {
        slice.times.push_back(traj.times[i]);
        std::vector<double> row;
        row.reserve(traj.n_points() - 2 * ev.cell_margin());
        for (int j = ev.cell_margin(); j < traj.n_points() - ev.cell_margin(); ++j)
            row.push_back(ev.at(i, j));
        slice.values.push_back(std::move(row));
    }
    return slice;
}

}  // namespace wavedecay
