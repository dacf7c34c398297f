#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wavedecay/rational.hpp"

namespace wavedecay {

// Spacetime region a pointwise bound lives on.
//   exterior : r > t + 1
//   interior : r < t - 1
//   cone_band: t/2 <= r <= 3t/2
enum class Region { exterior, interior, cone_band };

std::string region_name(Region r);
Region region_parse(const std::string& s);

// Pointwise envelope  |field| <= <r>^-a <v>^-b <u>^-c nu^-p,
// nu := min(<r>, <u>), all exponents exact rationals.
//
// Canonical form is region dependent:
//  * exterior: <v> ~ <r> and nu = <u> hold identically, so b and p fold
//    into a and c; canonical bounds have b = p = 0.
//  * interior: <t> ~ <v>, so <t>-weights live on the b slot; p is kept
//    (nu is genuinely two-sided there).
//  * cone_band: <r> ~ <t> ~ <v>, so a folds into b; nu = <u> folds into c.
struct DecayBound {
    Region region = Region::exterior;
    Rational a;       // exponent on <r>
    Rational b;       // exponent on <v>   (<t> canonicalized to <v> inside)
    Rational c;       // exponent on <u>
    Rational nu_pow;  // exponent on nu = min(<r>,<u>), >= 0

    DecayBound() = default;
    DecayBound(Region reg, Rational ra, Rational rb, Rational rc, Rational rp = Rational(0))
        : region(reg), a(ra), b(rb), c(rc), nu_pow(rp) {}

    friend bool operator==(const DecayBound& x, const DecayBound& y) {
        return x.region == y.region && x.a == y.a && x.b == y.b && x.c == y.c &&
               x.nu_pow == y.nu_pow;
    }
    friend bool operator!=(const DecayBound& x, const DecayBound& y) { return !(x == y); }

    std::string str() const;  // "(a,b,c,p)" with exponents in lowest terms
};

// Region-dependent canonical form (see DecayBound comment).
DecayBound canonicalize(const DecayBound& bound);

// True when `x` is at least as strong as `y` pointwise on the common region,
// using the weight inequalities valid there:
//   exterior: <u> <= <r>                    (r-weight may weaken into u-weight)
//   interior: <r> <= <v>, <u> <= <v>,       (v-weight may weaken into r/u),
//             nu <= <r>, nu <= <u>          (r/u-weight may weaken into nu)
// Inputs are canonicalized first.  Both bounds must share the region.
bool dominates(const DecayBound& x, const DecayBound& y);

// Weakest common envelope of two bounds on the same region: returns whichever
// bound dominates the other, else the componentwise-minimum exponents (always
// a valid upper envelope for a sum of two terms).
DecayBound join_weakest(const DecayBound& x, const DecayBound& y);

// Source envelope h <= <r>^-a <v>^-b <u>^-c for an inhomogeneity, plus its
// structural kind.  TimeDerivative sources are always cone-supported (the
// time-derivative bookkeeping only arises for the cone-cutoff term).
enum class SourceKind { plain, time_derivative, null_form };

struct SourceBound {
    Rational a;
    Rational b;
    Rational c;
    SourceKind kind = SourceKind::plain;
    bool cone_supported = false;

    SourceBound() = default;
    SourceBound(Rational ra, Rational rb, Rational rc, SourceKind k = SourceKind::plain)
        : a(ra), b(rb), c(rc), kind(k), cone_supported(k == SourceKind::time_derivative) {}

    Rational sum() const { return a + b + c; }

    friend bool operator==(const SourceBound& x, const SourceBound& y) {
        return x.a == y.a && x.b == y.b && x.c == y.c && x.kind == y.kind &&
               x.cone_supported == y.cone_supported;
    }

    std::string str() const;
};

// One rung of the bootstrap ladder: envelopes for the field, its full
// gradient and its good (tangential) derivatives, all on one region.
struct BoundState {
    DecayBound phi;
    DecayBound dphi;
    DecayBound dbar_phi;
    int step_index = 0;

    friend bool operator==(const BoundState& x, const BoundState& y) {
        return x.phi == y.phi && x.dphi == y.dphi && x.dbar_phi == y.dbar_phi &&
               x.step_index == y.step_index;
    }
};

// Iteration parameters.  sigma is the coefficient decay surcharge; the step
// cap guards against rule bugs; lambda_grid lists the candidate weight splits
// used when a mixed product envelope has to be re-expressed inside a rule
// domain (and doubles as the grid of admissible weight drops).
struct EngineConfig {
    Rational sigma;
    int max_steps = 0;
    std::vector<Rational> lambda_grid;

    // max_steps = 4*ceil(1/sigma); grid = {k/10} plus sigma-shifted values
    // and {sigma, 2*sigma}, clipped to (0,1).
    static EngineConfig defaults_for(Rational sigma);

    void validate() const;  // throws Error(config_error)
};

// A conversion-rule application recorded while iterating, for audit and for
// the quadrature cross-checks.
enum class RuleBranch { cone_integral_interior, cone_integral_exterior_far, cone_integral_exterior_near, time_derivative_gain };

struct RuleApplication {
    int step = 0;
    int channel = 0;          // 1..3, matching the source decomposition
    SourceBound triple;       // envelope actually fed to the rule
    RuleBranch branch;
    DecayBound output;
    bool relaxed_domain = false;  // accepted outside the strict lemma domain
};

struct IterationTrace {
    BoundState seed;
    std::vector<BoundState> states;  // states[0] == seed
    bool terminated = false;
    BoundState fixed_point;
    std::vector<RuleApplication> rule_log;
    std::vector<std::string> notes;  // discrepancy flags, switch index, ...
    int dt_rule_switch_step = -1;    // first step the derivative rule won for H2
};

}  // namespace wavedecay
