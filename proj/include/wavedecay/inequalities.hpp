#pragma once

#include <functional>
#include <string>
#include <vector>

#include "wavedecay/norms.hpp"

namespace wavedecay {

enum class CheckKind {
    cone_hardy,
    sobolev_u,
    sobolev_r_in,
    sobolev_r_out,
    sobolev_rr,
    klainerman_sideris,
    morawetz_dyadic,
    morawetz_interior,
};

std::string check_name(CheckKind k);
CheckKind check_parse(const std::string& name);

struct CheckReport {
    CheckKind kind;
    double T = 0.0;
    double scale2 = 0.0;
    double lhs = 0.0;
    double rhs = 0.0;
    double ratio = 0.0;  // lhs / rhs
};

// Closed-form radial field for the quadrature-exact checks.
struct SyntheticField {
    std::function<double(double t, double r)> value;
    std::function<double(double t, double r)> dr_value;
};

// Cone Hardy inequality at one time slice, both sides by direct quadrature.
CheckReport check_cone_hardy(const SyntheticField& f, double t);

// Dyadic Sobolev embeddings on solver output (lhs = block sup, rhs = the
// weighted L2 pieces); angular sums reduce to 4 pi factors in radial
// symmetry.  The smaller block scale must span at least 32 cells
// (Error(resolution_error) otherwise).
CheckReport check_sobolev(CheckKind kind, const Trajectory& traj, double T, double scale2);

// Pointwise second-derivative bound on sampled grid points with r >= r_min;
// lhs/rhs of the worst sample are reported.
CheckReport check_klainerman_sideris(const Trajectory& traj, double T, double R,
                                     double r_min = 8.0);

// Weighted L2 derivative bound on a dyadic block against the slightly
// enlarged block.
CheckReport check_morawetz_dyadic(const Trajectory& traj, double T, double R);

// Interior-bulk local-energy bound: lhs = LE1 over C_T^{<3T/4}, rhs =
// T^-1 ||<r> phi||_LE1 + ||Q||_LE* over the same block.
CheckReport check_morawetz_interior(const Trajectory& traj, double T);

}  // namespace wavedecay
