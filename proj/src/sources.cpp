#include "wavedecay/sources.hpp"

#include <algorithm>

#include "wavedecay/errors.hpp"

namespace wavedecay {

namespace {

const Rational kZero(0);
const Rational kOne(1);
const Rational kTwo(2);
const Rational kThree(3);
const Rational kMinusHalf(-1, 2);

// Joins two source envelopes on a region as the weakest common envelope,
// mapping through the DecayBound order.
SourceBound join_sources(const SourceBound& x, const SourceBound& y, Region region,
                         SourceKind kind) {
    DecayBound bx(region, x.a, x.b, x.c);
    DecayBound by(region, y.a, y.b, y.c);
    DecayBound j = join_weakest(bx, by);
    SourceBound out(j.a, j.b, j.c, kind);
    return out;
}

}  // namespace

SourceBound time_differentiated(const SourceBound& src) {
    SourceBound d = src;
    d.c += kOne;
    d.kind = SourceKind::plain;
    return d;
}

namespace detail {

SourceBound envelope_product(const DecayBound& xin, const DecayBound& yin) {
    DecayBound x = canonicalize(xin);
    DecayBound y = canonicalize(yin);
    if (x.region != y.region)
        throw Error(Errc::domain_error, "envelope product across regions");
    if (x.nu_pow != kZero || y.nu_pow != kZero)
        throw Error(Errc::domain_error, "envelope product expects nu-free factors");
    return SourceBound(x.a + y.a, x.b + y.b, x.c + y.c, SourceKind::null_form);
}

namespace {

// Valid-weakening candidates for a raw source envelope.
//
// Exterior slots fold <v> into <r> (the two scales are comparable there);
// r-weight may then move onto the u slot or back onto the <v> slot, and any
// slot may drop, but u-weight never strengthens into radial weight.  So a
// candidate (alpha, beta, c) is admissible iff alpha + beta <= A and
// alpha + beta + c <= A + c0.  Interior candidates move weight out of the
// <v> slot only (<r>^x <= <t>^x for r < t) and may drop anywhere.
std::vector<SourceBound> make_candidates(const SourceBound& raw_in, Region region,
                                         const EngineConfig& cfg) {
    std::vector<SourceBound> out;
    auto push = [&out](SourceBound s) {
        if (s.c < kMinusHalf) return;
        if (s.b < kZero) return;
        if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
    };

    if (region == Region::exterior) {
        SourceBound raw = raw_in;
        raw.a += raw.b;  // fold <v> ~ <r>
        raw.b = kZero;
        std::vector<Rational> alphas{raw.a};
        for (const auto& l : cfg.lambda_grid) alphas.push_back(kTwo + l);
        std::vector<Rational> cs{raw.c};
        for (const auto& m : cfg.lambda_grid) {
            cs.push_back(raw.c - m);
            cs.push_back(raw.c + m);
        }
        for (const auto& alpha : alphas)
            for (const auto& c : cs) {
                // Largest beta keeping both budget constraints.
                Rational beta = std::min(raw.a - alpha, raw.a + raw.c - alpha - c);
                if (beta < kZero) continue;
                SourceBound s(alpha, beta, c, raw_in.kind);
                s.cone_supported = raw_in.cone_supported;
                push(s);
            }
    } else {
        const SourceBound& raw = raw_in;
        std::vector<Rational> alphas{raw.a};
        for (const auto& l : cfg.lambda_grid) alphas.push_back(kTwo + l);
        std::vector<Rational> cs{raw.c};
        for (const auto& m : cfg.lambda_grid) {
            cs.push_back(raw.c - m);
            cs.push_back(raw.c + m);
        }
        for (const auto& alpha : alphas)
            for (const auto& c : cs) {
                Rational take_a = std::max(kZero, alpha - raw.a);
                Rational take_c = std::max(kZero, c - raw.c);
                Rational beta = raw.b - take_a - take_c;
                if (beta < kZero) continue;  // only the <v> slot can source weight
                SourceBound s(alpha, beta, c, raw_in.kind);
                s.cone_supported = raw_in.cone_supported;
                push(s);
            }
    }
    return out;
}

// Strict-domain test for the stated far-field rule; used to flag candidates
// accepted on a boundary the chains run over.
bool strict_plain_domain(const SourceBound& s) {
    return s.a > kTwo && s.a < kThree && s.b >= kZero && s.c >= kMinusHalf && s.c != kOne;
}

void consider(std::optional<Converted>& best, Converted cand) {
    if (!best) {
        best = std::move(cand);
        return;
    }
    const DecayBound& bo = best->output;
    const DecayBound& co = cand.output;
    bool c_dominates = dominates(co, bo);
    bool b_dominates = dominates(bo, co);
    bool replace = false;
    if (c_dominates && !b_dominates) {
        replace = true;
    } else if (c_dominates == b_dominates) {
        // Equal strength or incomparable: prefer more u-decay, then more
        // r-decay, then a strict-domain application, then the derivative rule
        // (it is used as soon as its hypothesis is available), then the
        // lexicographically smaller triple for determinism.
        bool cand_dt = cand.branch == RuleBranch::time_derivative_gain;
        bool best_dt = best->branch == RuleBranch::time_derivative_gain;
        if (co.c != bo.c) {
            replace = co.c > bo.c;
        } else if (co.a != bo.a) {
            replace = co.a > bo.a;
        } else if (cand.relaxed != best->relaxed) {
            replace = !cand.relaxed;
        } else if (cand_dt != best_dt) {
            replace = cand_dt;
        } else if (cand.triple.a != best->triple.a) {
            replace = cand.triple.a < best->triple.a;
        } else if (cand.triple.c != best->triple.c) {
            replace = cand.triple.c < best->triple.c;
        }
    }
    if (replace) best = std::move(cand);
}

}  // namespace

std::optional<Converted> best_plain_conversion(const SourceBound& raw, Region region,
                                               const EngineConfig& cfg) {
    std::optional<Converted> best;
    for (const auto& cand : make_candidates(raw, region, cfg)) {
        if (region == Region::interior) {
            if (!strict_plain_domain(cand)) continue;
            try {
                DecayBound out = apply_interior_conversion(cand);
                consider(best, {cand, RuleBranch::cone_integral_interior, out, false});
            } catch (const Error&) {
            }
        } else {
            if (cand.sum() <= kThree) {
                try {
                    DecayBound out = detail::exterior_radial_branch_relaxed(cand);
                    bool relaxed = !strict_plain_domain(cand) || cand.sum() == kThree;
                    consider(best, {cand, RuleBranch::cone_integral_exterior_far, out, relaxed});
                } catch (const Error&) {
                }
            }
            if (cand.sum() >= kThree) {
                try {
                    DecayBound out = detail::exterior_u_branch(cand);
                    consider(best, {cand, RuleBranch::cone_integral_exterior_near, out,
                                    cand.sum() == kThree});
                } catch (const Error&) {
                }
            }
        }
    }
    return best;
}

std::optional<Converted> best_dt_conversion(const SourceBound& raw, Region region,
                                            const EngineConfig& cfg, bool dt_admissible) {
    // Route one: hand the differentiated envelope to the plain rules.
    std::optional<Converted> best = best_plain_conversion(time_differentiated(raw), region, cfg);

    // Route two: the derivative rule on the source itself, over the same
    // candidate grid with the <v> slot folded onto <r> (cone support).
    if (dt_admissible) {
        SourceBound folded = raw;
        folded.a += folded.b;
        folded.b = kZero;
        for (auto cand : make_candidates(folded, Region::exterior, cfg)) {
            if (cand.b != kZero) continue;
            cand.kind = SourceKind::time_derivative;
            cand.cone_supported = true;
            try {
                DecayBound out = detail::dt_rule_core(cand, region);
                bool relaxed = region == Region::exterior && cand.a + cand.c <= kThree;
                consider(best, {cand, RuleBranch::time_derivative_gain, out, relaxed});
            } catch (const Error&) {
            }
        }
    }
    return best;
}

}  // namespace detail

SourceTriple assemble_sources(const BoundState& state, const EngineConfig& cfg) {
    const DecayBound phi = canonicalize(state.phi);
    const DecayBound dphi = canonicalize(state.dphi);
    const DecayBound dbar = canonicalize(state.dbar_phi);
    if (phi.region != dphi.region || phi.region != dbar.region)
        throw Error(Errc::rule_domain, "assemble_sources needs a single-region state");
    if (dphi.nu_pow != kZero)
        throw Error(Errc::rule_domain,
                    "assemble_sources expects the derivative bound in display form");
    const Region region = phi.region;
    const Rational sigma = cfg.sigma;

    SourceTriple s;

    // h1: the coefficient tail sees the field everywhere and the gradient off
    // the cone; off the cone <u> is comparable to the large scale, so the
    // gradient term reshapes to the field term's u-exponent before joining.
    SourceBound term1(phi.a + kTwo + sigma, phi.b, phi.c, SourceKind::plain);
    SourceBound term2(dphi.a + kOne + sigma, dphi.b, dphi.c, SourceKind::plain);
    Rational shift = term2.c - term1.c;
    term2.c = term1.c;
    if (region == Region::exterior)
        term2.a += shift;
    else
        term2.b += shift;
    s.h1 = join_sources(term1, term2, region, SourceKind::plain);

    // h2: cone part of the coefficient tail, evolving under a time derivative.
    s.h2 = SourceBound(phi.a + kOne + sigma, phi.b, phi.c, SourceKind::time_derivative);

    // h3: quadratic null interaction of the gradient with the good derivative.
    s.h3_raw = detail::envelope_product(dphi, dbar);
    auto chosen = detail::best_plain_conversion(s.h3_raw, region, cfg);
    if (!chosen)
        throw Error(Errc::no_admissible_split,
                    "no weight split of " + s.h3_raw.str() + " reaches a rule domain");
    s.h3 = chosen->triple;
    return s;
}

}  // namespace wavedecay
