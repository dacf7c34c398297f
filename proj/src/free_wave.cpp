#include <cmath>

#include "wavedecay/errors.hpp"
#include "wavedecay/solver.hpp"

namespace wavedecay {

namespace {

// odd extensions psi0(s) = s*phi0(|s|), psi1(s) = s*phi1(|s|)
double psi0(const InitialData& d, double s) { return s * d.epsilon * d.shape(s); }
double psi0_deriv(const InitialData& d, double s) {
    return d.epsilon * (d.shape(s) + s * d.dshape(s));
}
double psi1(const InitialData& d, double s) {
    return s * d.velocity_factor * d.epsilon * d.shape(s);
}

double simpson(const InitialData& d, double a, double b, int n) {
    double h = (b - a) / n;
    double sum = psi1(d, a) + psi1(d, b);
    for (int i = 1; i < n; ++i) sum += psi1(d, a + i * h) * (i % 2 ? 4.0 : 2.0);
    return sum * h / 3.0;
}

// G(s) = int_0^s psi1; even since psi1 is odd.  Adaptive-enough fixed-order
// composite Simpson over the supported part.
double velocity_moment(const InitialData& d, double s) {
    double mag = std::min(std::abs(s), d.support_radius);
    if (mag == 0.0 || d.velocity_factor == 0.0) return 0.0;
    int n = 2 * std::max(64, static_cast<int>(mag * 16));
    return simpson(d, 0.0, mag, n);
}

}  // namespace

double free_wave_exact(const InitialData& data, double t, double r) {
    if (r < 0.0) throw Error(Errc::domain_error, "free wave needs r >= 0");
    const double eps_r = 1e-7 * (1.0 + t);
    if (r < eps_r) {
        // analytic origin limit
        return psi0_deriv(data, t) + psi1(data, t);
    }
    double position = 0.5 * (psi0(data, r + t) + psi0(data, r - t)) / r;
    double velocity = 0.0;
    if (data.velocity_factor != 0.0)
        velocity = 0.5 * (velocity_moment(data, r + t) - velocity_moment(data, r - t)) / r;
    return position + velocity;
}

}  // namespace wavedecay
