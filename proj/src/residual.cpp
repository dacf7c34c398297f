#include "wavedecay/residual.hpp"

#include <cmath>

#include "wavedecay/errors.hpp"

namespace wavedecay {

namespace {

// fourth-order centered stencils along either axis
using Field = std::vector<std::vector<double>>;

inline double d1_t(const Field& f, int i, int j, double h) {
    return (-f[i + 2][j] + 8.0 * f[i + 1][j] - 8.0 * f[i - 1][j] + f[i - 2][j]) / (12.0 * h);
}
inline double d1_r(const Field& f, int i, int j, double h) {
    return (-f[i][j + 2] + 8.0 * f[i][j + 1] - 8.0 * f[i][j - 1] + f[i][j - 2]) / (12.0 * h);
}
inline double d2_t(const Field& f, int i, int j, double h) {
    return (-f[i + 2][j] + 16.0 * f[i + 1][j] - 30.0 * f[i][j] + 16.0 * f[i - 1][j] -
            f[i - 2][j]) /
           (12.0 * h * h);
}
inline double d2_r(const Field& f, int i, int j, double h) {
    return (-f[i][j + 2] + 16.0 * f[i][j + 1] - 30.0 * f[i][j] + 16.0 * f[i][j - 1] -
            f[i][j - 2]) /
           (12.0 * h * h);
}

}  // namespace

double residual_norm(const Trajectory& traj) {
    const SimConfig& cfg = traj.config;
    if (cfg.record_stride != 1)
        throw Error(Errc::domain_error, "residual check needs a stride-one recording");
    if (traj.n_snaps() < 5 || traj.n_points() < 9)
        throw Error(Errc::domain_error, "residual check needs at least a 5x9 grid");

    const double dr = traj.dr();
    const double dt = traj.snap_dt();
    const double ll = static_cast<double>(cfg.mode_ell) * (cfg.mode_ell + 1);
    double worst = 0.0;
    for (int i = 2; i < traj.n_snaps() - 2; ++i) {
        for (int j = 4; j < traj.n_points() - 4; ++j) {
            double r = traj.r(j);
            double phi = traj.phi[i][j];
            double phi_t = d1_t(traj.phi, i, j, dt);
            double phi_tt = d2_t(traj.phi, i, j, dt);
            double phi_r = d1_r(traj.phi, i, j, dr);
            double phi_rr = d2_r(traj.phi, i, j, dr);
            double h = cfg.coeffs.h(r);
            double p_of_phi = -phi_tt + (1.0 + h) * (phi_rr + 2.0 * phi_r / r) +
                              (cfg.coeffs.dh(r) + cfg.coeffs.br(r)) * phi_r +
                              cfg.coeffs.b0(r) * phi_t + cfg.coeffs.v(r) * phi -
                              ll * (1.0 / (r * r) + cfg.coeffs.gw(r)) * phi;
            double q = 0.0;
            switch (cfg.nonlinearity) {
                case Nonlinearity::null_form:
                    q = cfg.null_scale * (-phi_t * phi_t + phi_r * phi_r);
                    break;
                case Nonlinearity::square_dt_phi:
                    q = phi_t * phi_t;
                    break;
                case Nonlinearity::none:
                    break;
            }
            worst = std::max(worst, std::abs(p_of_phi - q));
        }
    }
    return worst;
}

}  // namespace wavedecay
