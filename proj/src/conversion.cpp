#include "wavedecay/conversion.hpp"

#include "wavedecay/errors.hpp"

namespace wavedecay {

namespace {

const Rational kZero(0);
const Rational kOne(1);
const Rational kTwo(2);
const Rational kThree(3);
const Rational kMinusHalf(-1, 2);

void require(bool ok, const std::string& what) {
    if (!ok) throw Error(Errc::rule_domain, what);
}

void check_source_exponents(const SourceBound& src) {
    require(src.a > kTwo && src.a < kThree, "source needs 2 < a < 3, got a = " + src.a.str());
    require(src.b >= kZero, "source needs b >= 0, got b = " + src.b.str());
    require(src.c >= kMinusHalf, "source needs c >= -1/2, got c = " + src.c.str());
    if (src.c == kOne)
        throw Error(Errc::boundary_eta, "source u-exponent sits on the excluded value 1");
}

}  // namespace

Rational eta_shift(const Rational& eta) {
    if (eta == kOne)
        throw Error(Errc::boundary_eta, "eta = 1 is excluded from the shift map");
    if (eta < kMinusHalf)
        throw Error(Errc::rule_domain, "eta_shift needs eta >= -1/2, got " + eta.str());
    return eta < kOne ? eta - kTwo : Rational(-1);
}

namespace detail {

Rational cone_integral_u_exponent(const SourceBound& src) {
    return src.a + src.b + eta_shift(src.c) - kOne;
}

DecayBound exterior_radial_branch_relaxed(const SourceBound& src) {
    if (!(src.a > kOne))
        throw Error(Errc::rule_domain, "radial branch needs a > 1, got " + src.a.str());
    if (src.sum() > kThree)
        throw Error(Errc::rule_domain, "radial branch needs sum <= 3");
    if (src.c < kMinusHalf)
        throw Error(Errc::rule_domain, "radial branch needs c >= -1/2");
    return DecayBound(Region::exterior, src.sum() - kTwo, kZero, kZero, kZero);
}

DecayBound exterior_u_branch(const SourceBound& src) {
    check_source_exponents(src);
    if (src.sum() < kThree)
        throw Error(Errc::rule_domain, "u branch needs sum >= 3");
    return DecayBound(Region::exterior, kOne, kZero, cone_integral_u_exponent(src), kZero);
}

DecayBound dt_rule_core(const SourceBound& src, Region region) {
    if (src.kind != SourceKind::time_derivative)
        throw Error(Errc::rule_domain, "time-derivative rule needs a TimeDerivative source");
    require(src.b == kZero, "time-derivative rule takes a pure (a,c) envelope");
    require(src.a > kTwo && src.a < kThree, "time-derivative rule needs 2 < a < 3");
    require(src.c >= kMinusHalf, "time-derivative rule needs c >= -1/2");
    if (src.c == kOne)
        throw Error(Errc::boundary_eta, "source u-exponent sits on the excluded value 1");
    return DecayBound(region, kOne, kZero, src.a + eta_shift(src.c), kZero);
}

}  // namespace detail

DecayBound apply_interior_conversion(const SourceBound& src) {
    check_source_exponents(src);
    return DecayBound(Region::interior, kOne, kZero, detail::cone_integral_u_exponent(src),
                      kZero);
}

DecayBound apply_exterior_conversion(const SourceBound& src) {
    check_source_exponents(src);
    if (src.sum() == kThree)
        throw Error(Errc::borderline_sum, "exponent sum sits on the excluded value 3");
    if (src.sum() > kThree)
        return DecayBound(Region::exterior, kOne, kZero,
                          detail::cone_integral_u_exponent(src), kZero);
    return DecayBound(Region::exterior, src.sum() - kTwo, kZero, kZero, kZero);
}

DecayBound apply_dt_conversion(const SourceBound& src, Region region) {
    if (region == Region::exterior && src.a + src.c < kThree)
        throw Error(Errc::unsupported,
                    "exterior time-derivative rule with a+c < 3 is not provided");
    return detail::dt_rule_core(src, region);
}

DecayBound derivative_gain(const BoundState& state) {
    if (state.phi.nu_pow != kZero)
        throw Error(Errc::rule_domain, "derivative gain expects a field bound with nu_pow = 0");
    DecayBound d = state.phi;
    d.nu_pow = kOne;
    return d;
}

DecayBound tangential_bound(const BoundState& state) {
    const DecayBound phi = canonicalize(state.phi);
    const DecayBound dphi = canonicalize(state.dphi);
    if (phi.region != dphi.region)
        throw Error(Errc::rule_domain, "tangential bound needs phi and dphi on one region");

    DecayBound grad_term = dphi;   // (<u>/scale) * dphi
    DecayBound field_term = phi;   // (1/scale) * Z phi
    grad_term.c -= kOne;
    if (phi.region == Region::interior || phi.region == Region::cone_band) {
        grad_term.b += kOne;
        field_term.b += kOne;
    } else {
        grad_term.a += kOne;
        field_term.a += kOne;
    }
    return join_weakest(grad_term, field_term);
}

DecayBound convert_r_to_t(const DecayBound& phi_in, const DecayBound& dphi_in,
                          const EngineConfig& cfg) {
    const DecayBound phi = canonicalize(phi_in);
    const DecayBound dphi = canonicalize(dphi_in);
    if (!(phi.a == kOne && phi.b == kZero && phi.nu_pow == kZero))
        throw Error(Errc::rule_domain,
                    "r-to-t conversion expects phi of the form <r>^-1 <u>^-q");
    const Rational q = phi.c;
    if (q < kMinusHalf)
        throw Error(Errc::rule_domain, "r-to-t conversion needs q >= -1/2, got " + q.str());
    if (!(q > Rational(-1) + cfg.sigma + cfg.sigma))
        throw Error(Errc::rule_domain,
                    "r-to-t conversion needs q > -1 + 2*sigma, got q = " + q.str());
    DecayBound needed(phi.region, kOne, kZero, kOne + q - cfg.sigma, kZero);
    if (!dominates(dphi, needed))
        throw Error(Errc::rule_domain,
                    "r-to-t conversion needs derivative control <r>^-1 <u>^-(1+q-sigma); have " +
                        dphi.str());
    return DecayBound(Region::interior, kZero, kOne, q, kZero);
}

}  // namespace wavedecay
