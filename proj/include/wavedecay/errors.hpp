#pragma once

#include <stdexcept>
#include <string>

namespace wavedecay {

// Error categories shared across the engine, solver and measurement layers.
enum class Errc {
    rule_domain,          // conversion-rule precondition violated
    boundary_eta,         // u-exponent hit the excluded value 1
    borderline_sum,       // exponent sum hit the excluded value 3
    unsupported,          // case deliberately left out of the rule set
    no_admissible_split,  // no weight split reaches the rule domain
    step_cap_exceeded,    // iteration did not reach a fixed point in time
    config_error,
    domain_error,
    empty_region,
    resolution_error,
    blowup_detected,
    null_condition_violated,
    radial_symmetry,
    io_error,
    usage_error,
};

class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
    Errc code() const { return code_; }

  private:
    Errc code_;
};

// Raised by the solver when the field exceeds the runaway threshold.
class BlowupError : public Error {
  public:
    BlowupError(double time, const std::string& msg)
        : Error(Errc::blowup_detected, msg), time_(time) {}
    double time() const { return time_; }

  private:
    double time_;
};

}  // namespace wavedecay
