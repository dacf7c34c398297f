#pragma once

#include <optional>
#include <vector>

#include "wavedecay/conversion.hpp"
#include "wavedecay/decay.hpp"

namespace wavedecay {

// Source envelopes for one bootstrap step, derived from the current state
// and the coefficient decay classes:
//   h1: <r>^-(2+sigma) * phi  joined with the off-cone part
//       <r>^-(1+sigma) * dphi (reshaped on its support so the shapes align)
//   h2: <r>^-(1+sigma) * phi, cone-supported, TimeDerivative kind
//   h3: dphi * dbar product, re-expressed over cfg.lambda_grid into the
//       split whose converted output is strongest
struct SourceTriple {
    SourceBound h1;
    SourceBound h2;
    SourceBound h3;       // chosen split
    SourceBound h3_raw;   // plain product envelope before the split
};

SourceTriple assemble_sources(const BoundState& state, const EngineConfig& cfg);

// The differentiated envelope of a cone-supported TimeDerivative source:
// the time derivative lands on the field, costing one power of <u> on the
// cone (where the derivative bound supplies exactly that factor).
SourceBound time_differentiated(const SourceBound& src);

namespace detail {

// One evaluated candidate of the split search.
struct Converted {
    SourceBound triple;
    RuleBranch branch;
    DecayBound output;
    bool relaxed = false;
};

// Best conversion of a plain/null-form source over re-expressions and drops
// drawn from cfg.lambda_grid.  Returns nullopt when no candidate reaches any
// rule domain.
std::optional<Converted> best_plain_conversion(const SourceBound& raw, Region region,
                                               const EngineConfig& cfg);

// Best conversion of a TimeDerivative source, racing the plain route on the
// differentiated envelope against the derivative rule on the source itself.
// dt_admissible gates the derivative rule on the <u>-weighted derivative
// hypothesis, which the caller checks against the current state.
std::optional<Converted> best_dt_conversion(const SourceBound& raw, Region region,
                                            const EngineConfig& cfg, bool dt_admissible);

// Envelope product (exponents add) on canonical slots.
SourceBound envelope_product(const DecayBound& x, const DecayBound& y);

}  // namespace detail

}  // namespace wavedecay
