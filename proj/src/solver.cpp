#include <cmath>

#include "wavedecay/errors.hpp"
#include "wavedecay/solver.hpp"

namespace wavedecay {

int Trajectory::snap_at(double t) const {
    if (times.empty()) throw Error(Errc::domain_error, "empty trajectory");
    if (t < times.front() - 1e-9 || t > times.back() + 1e-9)
        throw Error(Errc::domain_error, "time outside the recorded span");
    double ds = snap_dt();
    int i = static_cast<int>(std::lround((t - times.front()) / ds));
    if (i < 0) i = 0;
    if (i >= n_snaps()) i = n_snaps() - 1;
    return i;
}

namespace {

// Per-point coefficient tables on the grid (profiles are time independent).
struct CoeffTables {
    std::vector<double> h, dh, br, b0, v, ang;  // ang = l(l+1)(1/r^2 + gw)
};

CoeffTables make_tables(const SimConfig& cfg) {
    const int np = cfg.grid.n_cells + 1;
    const double dr = cfg.grid.dr();
    const double ll = static_cast<double>(cfg.mode_ell) * (cfg.mode_ell + 1);
    CoeffTables tb;
    tb.h.resize(np);
    tb.dh.resize(np);
    tb.br.resize(np);
    tb.b0.resize(np);
    tb.v.resize(np);
    tb.ang.resize(np);
    for (int j = 0; j < np; ++j) {
        double r = j * dr;
        tb.h[j] = cfg.coeffs.h(r);
        tb.dh[j] = cfg.coeffs.dh(r);
        tb.br[j] = cfg.coeffs.br(r);
        tb.b0[j] = cfg.coeffs.b0(r);
        tb.v[j] = cfg.coeffs.v(r);
        tb.ang[j] = j == 0 ? 0.0 : ll * (1.0 / (r * r) + cfg.coeffs.gw(r));
    }
    return tb;
}

// Nonlinearity as a function of (dt phi, dr phi).
inline double nonlinear_rhs(Nonlinearity kind, double scale, double p, double q) {
    switch (kind) {
        case Nonlinearity::null_form: return scale * (-p * p + q * q);
        case Nonlinearity::square_dt_phi: return p * p;
        case Nonlinearity::none: return 0.0;
    }
    return 0.0;
}

inline double nonlinear_rhs_dp(Nonlinearity kind, double scale, double p) {
    switch (kind) {
        case Nonlinearity::null_form: return -2.0 * scale * p;
        case Nonlinearity::square_dt_phi: return 2.0 * p;
        case Nonlinearity::none: return 0.0;
    }
    return 0.0;
}

}  // namespace

Trajectory evolve(const SimConfig& config) {
    config.validate();
    const int np = config.grid.n_cells + 1;
    const double dr = config.grid.dr();
    const double dt = config.grid.dt();
    const int n_steps = static_cast<int>(std::lround(config.t_final / dt));
    const CoeffTables tb = make_tables(config);
    const Nonlinearity nl = config.nonlinearity;
    const double nls = config.null_scale;
    const double blowup_threshold =
        1e3 * std::max(config.data.epsilon, 1e-300);

    // psi = r*phi on three time levels
    std::vector<double> prev(np), cur(np), next(np);
    std::vector<double> phi(np), dphi_r(np);

    Trajectory traj;
    traj.config = config;

    // field and radial derivative of phi from a psi level; phi(0) and
    // pi(0) by the one-sided limit of the r-derivative (psi is odd)
    auto fill_phi = [&](const std::vector<double>& psi) {
        for (int j = 1; j < np; ++j) phi[j] = psi[j] / (j * dr);
        phi[0] = (4.0 * psi[1] - psi[2]) / (2.0 * dr);
        for (int j = 1; j < np - 1; ++j)
            dphi_r[j] = (psi[j + 1] - psi[j - 1]) / (2.0 * dr * (j * dr)) - phi[j] / (j * dr);
        dphi_r[0] = 0.0;  // regularity: phi is even in r
        dphi_r[np - 1] = 0.0;
    };

    // spatial part of the rhs for d^2psi/dt^2 at one grid level:
    //   psi_rr + r * [ h*(phi_rr + 2 phi_r / r) + (dh + 2h/r + br) * phi_r
    //                  + v * phi - ang * phi ]
    // with the angular term expressed directly on psi for the flat part.
    auto spatial_rhs = [&](const std::vector<double>& psi, int j) {
        double psi_rr = (psi[j + 1] - 2.0 * psi[j] + psi[j - 1]) / (dr * dr);
        double r = j * dr;
        double phi_rr = (phi[j + 1] - 2.0 * phi[j] + phi[j - 1]) / (dr * dr);
        double pert = tb.h[j] * (phi_rr + 2.0 * dphi_r[j] / r) +
                      (tb.dh[j] + 2.0 * tb.h[j] / r + tb.br[j]) * dphi_r[j] +
                      tb.v[j] * phi[j] - tb.ang[j] * phi[j];
        return psi_rr + r * pert;
    };

    auto record = [&](double t, const std::vector<double>& psi,
                      const std::vector<double>& pi_grid) {
        traj.times.push_back(t);
        std::vector<double> snap_phi(np), snap_pi(np);
        for (int j = 1; j < np; ++j) {
            snap_phi[j] = psi[j] / (j * dr);
            snap_pi[j] = pi_grid[j];
        }
        snap_phi[0] = (4.0 * psi[1] - psi[2]) / (2.0 * dr);
        snap_pi[0] = (4.0 * (1 * dr) * pi_grid[1] - (2 * dr) * pi_grid[2]) / (2.0 * dr);
        traj.phi.push_back(std::move(snap_phi));
        traj.pi.push_back(std::move(snap_pi));
    };

    // initial data
    for (int j = 0; j < np; ++j) {
        double r = j * dr;
        cur[j] = r * config.data.phi0(r);
    }
    std::vector<double> pi0(np);
    for (int j = 0; j < np; ++j) pi0[j] = config.data.phi1(j * dr);
    record(0.0, cur, pi0);

    // first step by Taylor expansion from the data
    fill_phi(cur);
    for (int j = 1; j < np - 1; ++j) {
        double r = j * dr;
        double p = pi0[j];
        double acc = spatial_rhs(cur, j) +
                     r * (tb.b0[j] * p - nonlinear_rhs(nl, nls, p, dphi_r[j]));
        prev[j] = cur[j];
        next[j] = cur[j] + dt * r * p + 0.5 * dt * dt * acc;
    }
    next[0] = 0.0;
    next[np - 1] = 0.0;
    prev.swap(cur);
    cur.swap(next);
    // now prev = level 0, cur = level 1

    std::vector<double> pi_grid(np);
    int step = 1;
    const int total_steps = n_steps + 1;  // one extra level for centered pi
    while (step <= total_steps) {
        fill_phi(cur);
        double max_phi = 0.0;
        for (int j = 1; j < np - 1; ++j) {
            double r = j * dr;
            double link = spatial_rhs(cur, j);
            double base = 2.0 * cur[j] - prev[j] + dt * dt * link;
            // centered first-order terms make the update implicit per point:
            //   x = base + dt^2 r G(p),  p = (x - prev)/(2 dt r)
            double x = base;
            if (nl != Nonlinearity::none || tb.b0[j] != 0.0) {
                for (int it = 0; it < 8; ++it) {
                    double p = (x - prev[j]) / (2.0 * dt * r);
                    double g = tb.b0[j] * p - nonlinear_rhs(nl, nls, p, dphi_r[j]);
                    double f = x - base - dt * dt * r * g;
                    double dg = tb.b0[j] - nonlinear_rhs_dp(nl, nls, p);
                    double df = 1.0 - 0.5 * dt * dg;
                    double delta = f / df;
                    x -= delta;
                    if (std::abs(delta) <= 1e-14 * (std::abs(x) + 1e-30)) break;
                }
            }
            next[j] = x;
            pi_grid[j] = (x - prev[j]) / (2.0 * dt * r);
            max_phi = std::max(max_phi, std::abs(phi[j]));
        }
        next[0] = 0.0;
        next[np - 1] = 0.0;

        if (!std::isfinite(max_phi) || max_phi > blowup_threshold)
            throw BlowupError(step * dt, "field exceeded the runaway threshold");

        // pi_grid is centered at the *current* level; record it with cur
        if (step % config.record_stride == 0 && step <= n_steps)
            record(step * dt, cur, pi_grid);

        prev.swap(cur);
        cur.swap(next);
        ++step;
    }
    return traj;
}

}  // namespace wavedecay
