#pragma once

#include "wavedecay/decay.hpp"

namespace wavedecay {

// Exponent bookkeeping for integrating a <u>^-eta source over a backward
// light cone: eta-2 below the critical value, -1 above it.  eta == 1 is the
// excluded boundary (BoundaryEta); eta < -1/2 is outside the rule domain.
Rational eta_shift(const Rational& eta);

// Cone-integral bound, interior region.  Source envelope (a,b,c) with
// 2 < a < 3, b >= 0, c >= -1/2, c != 1 maps to the interior bound
//   <r>^-1 <u>^-(a + b + eta_shift(c) - 1).
DecayBound apply_interior_conversion(const SourceBound& src);

// Cone-integral bound, exterior region.  For a+b+c > 3 the output matches the
// interior formula; for a+b+c < 3 the whole sum converts to radial decay
// r^-(a+b+c-2).  The sum 3 is the excluded boundary (BorderlineSum).
DecayBound apply_exterior_conversion(const SourceBound& src);

// Cone-integral bound for a time-differentiated, cone-supported source with
// <u>-weighted derivative control: one factor of <u> better than the plain
// interior conversion at b = 0.  The exterior variant requires a+c > 3; the
// sub-3 exterior case is deliberately unsupported.
DecayBound apply_dt_conversion(const SourceBound& src, Region region = Region::interior);

// Local-energy derivative gain: a field envelope with nu_pow = 0 yields the
// same envelope times nu^-1 for the full gradient.
DecayBound derivative_gain(const BoundState& state);

// Tangential-derivative envelope: the weaker of (<u>/<r>) * dphi and
// (1/<r>) * phi in the exterior; the same with <r> replaced by <t> in the
// interior.
DecayBound tangential_bound(const BoundState& state);

// Turns the radial decay <r>^-1 <u>^-q (with derivative control
// <r>^-1 <u>^-(1+q-sigma)) into <v>^-1 <u>^-q on the interior bulk.
// Requires q >= -1/2 and q > -1 + 2*sigma.
DecayBound convert_r_to_t(const DecayBound& phi, const DecayBound& dphi,
                          const EngineConfig& cfg);

namespace detail {

// Core formulas with the domains the bootstrap actually exercises.  The
// public operations above wrap these with the strict stated domains; the
// iteration drivers call them directly where the chains run on a boundary
// (see iteration.cpp for the exact cases and why they are sound there).

// Output u-exponent of the far-field cone integral: a + b + eta_shift(c) - 1.
Rational cone_integral_u_exponent(const SourceBound& src);

// Radial-decay branch accepting the closed boundary sum <= 3; requires a > 1.
DecayBound exterior_radial_branch_relaxed(const SourceBound& src);

// u-decay branch in the exterior; the driver only feeds it sums >= 3.
DecayBound exterior_u_branch(const SourceBound& src);

// Time-derivative rule without the exterior sum floor; the iteration needs
// it for cone-supported sources whose sums sit at or below 3.
DecayBound dt_rule_core(const SourceBound& src, Region region);

}  // namespace detail

}  // namespace wavedecay
