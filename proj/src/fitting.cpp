#include "wavedecay/fitting.hpp"

#include <cmath>

#include "wavedecay/errors.hpp"

namespace wavedecay {

FitResult fit_decay_exponents(const std::vector<std::pair<double, double>>& samples) {
    if (samples.size() < 3)
        throw Error(Errc::domain_error, "power-law fit needs at least 3 samples");
    std::vector<double> xs, ys;
    xs.reserve(samples.size());
    ys.reserve(samples.size());
    for (const auto& [scale, value] : samples) {
        if (!(scale > 0.0) || !(value > 0.0))
            throw Error(Errc::domain_error, "power-law fit needs positive samples");
        xs.push_back(std::log(scale));
        ys.push_back(std::log(value));
    }
    const int n = static_cast<int>(xs.size());
    double xbar = 0.0, ybar = 0.0;
    for (int i = 0; i < n; ++i) {
        xbar += xs[i];
        ybar += ys[i];
    }
    xbar /= n;
    ybar /= n;
    double sxx = 0.0, sxy = 0.0;
    for (int i = 0; i < n; ++i) {
        sxx += (xs[i] - xbar) * (xs[i] - xbar);
        sxy += (xs[i] - xbar) * (ys[i] - ybar);
    }
    if (sxx == 0.0) throw Error(Errc::domain_error, "power-law fit needs distinct scales");
    FitResult r;
    r.slope = sxy / sxx;
    r.intercept = ybar - r.slope * xbar;
    double ss = 0.0;
    for (int i = 0; i < n; ++i) {
        double e = ys[i] - (r.intercept + r.slope * xs[i]);
        ss += e * e;
    }
    r.residual = std::sqrt(ss / n);
    r.sample_count = n;
    return r;
}

}  // namespace wavedecay
