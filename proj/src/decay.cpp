#include "wavedecay/decay.hpp"

#include <algorithm>
#include <sstream>

#include "wavedecay/errors.hpp"

namespace wavedecay {

std::string region_name(Region r) {
    switch (r) {
        case Region::exterior: return "exterior";
        case Region::interior: return "interior";
        case Region::cone_band: return "cone_band";
    }
    return "?";
}

Region region_parse(const std::string& s) {
    if (s == "exterior") return Region::exterior;
    if (s == "interior") return Region::interior;
    if (s == "cone_band") return Region::cone_band;
    throw Error(Errc::domain_error, "unknown region: " + s);
}

std::string DecayBound::str() const {
    std::ostringstream os;
    os << '(' << a << ',' << b << ',' << c << ',' << nu_pow << ')';
    return os.str();
}

std::string SourceBound::str() const {
    std::ostringstream os;
    os << '(' << a << ',' << b << ',' << c << ')';
    return os.str();
}

DecayBound canonicalize(const DecayBound& bound) {
    DecayBound r = bound;
    switch (bound.region) {
        case Region::exterior:
            // <v> ~ <r>, nu = <u> identically for r > t.
            r.a += r.b;
            r.b = Rational(0);
            r.c += r.nu_pow;
            r.nu_pow = Rational(0);
            break;
        case Region::interior:
            break;  // already in (a,b,c,p) form with <t> on the b slot
        case Region::cone_band:
            // <r> ~ <t> ~ <v>, nu = <u> for t/2 <= r <= 3t/2.
            r.b += r.a;
            r.a = Rational(0);
            r.c += r.nu_pow;
            r.nu_pow = Rational(0);
            break;
    }
    return r;
}

bool dominates(const DecayBound& xin, const DecayBound& yin) {
    if (xin.region != yin.region)
        throw Error(Errc::domain_error, "dominates: mixed regions");
    DecayBound x = canonicalize(xin);
    DecayBound y = canonicalize(yin);
    switch (x.region) {
        case Region::exterior:
            // r-weight may move onto u; any weight may drop.
            return x.a >= y.a && x.a + x.c >= y.a + y.c;
        case Region::cone_band:
            // single radial-scale slot b plus u-slot; b may move onto c
            // (<u> <= <v> on the band) and weights may drop.
            return x.b >= y.b && x.b + x.c >= y.b + y.c;
        case Region::interior: {
            // Transfers: b->a, b->c (v dominates r and u), a->p, c->p
            // (nu is dominated by both), plus free drops.
            if (x.b < y.b) return false;
            Rational budget = x.b - y.b;
            Rational need_a = std::max(Rational(0), y.a - x.a);
            Rational need_c = std::max(Rational(0), y.c - x.c);
            if (budget < need_a + need_c) return false;
            Rational total_x = x.a + x.b + x.c + x.nu_pow;
            Rational total_y = y.a + y.b + y.c + y.nu_pow;
            return total_x >= total_y;
        }
    }
    return false;
}

DecayBound join_weakest(const DecayBound& xin, const DecayBound& yin) {
    DecayBound x = canonicalize(xin);
    DecayBound y = canonicalize(yin);
    if (x.region != y.region)
        throw Error(Errc::domain_error, "join_weakest: mixed regions");
    if (dominates(x, y)) return y;
    if (dominates(y, x)) return x;
    DecayBound j = x;
    j.a = std::min(x.a, y.a);
    j.b = std::min(x.b, y.b);
    j.c = std::min(x.c, y.c);
    j.nu_pow = std::min(x.nu_pow, y.nu_pow);
    return j;
}

EngineConfig EngineConfig::defaults_for(Rational sigma) {
    EngineConfig cfg;
    cfg.sigma = sigma;
    // ceil(1/sigma) for positive rational sigma = num/den -> ceil(den/num).
    std::int64_t ceil_inv = (sigma.den() + sigma.num() - 1) / sigma.num();
    cfg.max_steps = static_cast<int>(4 * ceil_inv);
    auto push = [&cfg](Rational v) {
        if (v > Rational(0) && v < Rational(1) &&
            std::find(cfg.lambda_grid.begin(), cfg.lambda_grid.end(), v) ==
                cfg.lambda_grid.end())
            cfg.lambda_grid.push_back(v);
    };
    for (int k = 1; k <= 9; ++k) push(rat(k, 10));
    for (int k = 0; k <= 9; ++k) {
        push(rat(k, 10) + sigma);
        push(rat(k, 10) - sigma);
    }
    push(sigma);
    push(sigma + sigma);
    std::sort(cfg.lambda_grid.begin(), cfg.lambda_grid.end());
    return cfg;
}

void EngineConfig::validate() const {
    if (!(sigma > Rational(0)) || !(sigma < rat(1, 2)))
        throw Error(Errc::config_error, "sigma must lie in (0, 1/2)");
    if (max_steps <= 0) throw Error(Errc::config_error, "max_steps must be positive");
    if (lambda_grid.empty()) throw Error(Errc::config_error, "lambda_grid must be nonempty");
    for (const auto& l : lambda_grid)
        if (!(l > Rational(0)) || !(l < Rational(1)))
            throw Error(Errc::config_error, "lambda_grid values must lie in (0,1)");
}

}  // namespace wavedecay
