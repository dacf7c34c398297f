#pragma once

#include <iosfwd>
#include <string>

#include "wavedecay/decay.hpp"

namespace wavedecay {

// Seeds of the two bootstrap chains (the envelopes the global-existence
// bounds provide on each region, in canonical slots).
BoundState exterior_seed();
BoundState interior_seed();

// Exterior chain: starting from the exterior seed, each step assembles the
// three source envelopes, converts each channel through the strongest
// admissible rule application, and joins the channel outputs into the next
// state.  The radial branch carries the step while the exponent sum stays
// below 3; past that the u-decay branch takes over.  Terminates at the first
// step that no longer strengthens the field bound.
IterationTrace run_exterior_iteration(const EngineConfig& cfg);

// Interior chain: requires the terminated exterior trace (the interior
// sources see the exterior data through the cone).  Each cycle additionally
// turns the radial decay of the joined bound into time decay before taking
// the derivative and tangential envelopes.
IterationTrace run_interior_iteration(const EngineConfig& cfg, const IterationTrace& exterior);

// Line-oriented trace format, one state per line:
//   step=<k> region=<tag> phi=(a,b,c,p) dphi=(a,b,c,p) dbar=(a,b,c,p)
// with exponents in lowest terms ("n" or "n/d").
std::string trace_to_text(const IterationTrace& trace);
IterationTrace trace_from_text(const std::string& text);

}  // namespace wavedecay
