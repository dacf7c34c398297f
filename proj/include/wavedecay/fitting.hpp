#pragma once

#include <utility>
#include <vector>

namespace wavedecay {

// Least-squares power-law fit on (log scale, log value) pairs.
struct FitResult {
    double slope = 0.0;
    double intercept = 0.0;
    double residual = 0.0;  // RMS of log-space residuals
    int sample_count = 0;
};

// Needs >= 3 samples with positive scales and values; throws
// Error(domain_error) otherwise.
FitResult fit_decay_exponents(const std::vector<std::pair<double, double>>& samples);

}  // namespace wavedecay
