#include "wavedecay/inequalities.hpp"

#include <cmath>

#include "wavedecay/errors.hpp"

namespace wavedecay {

namespace {

constexpr double kFourPi = 4.0 * 3.14159265358979323846;

inline double jap(double x) { return std::sqrt(1.0 + x * x); }

// composite Simpson over [a, b]
double simpson(const std::function<double(double)>& f, double a, double b, int n) {
    if (n % 2) ++n;
    double h = (b - a) / n;
    double sum = f(a) + f(b);
    for (int i = 1; i < n; ++i) sum += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
    return sum * h / 3.0;
}

// spacetime L2 of |Z^word phi| over a block, measure 4 pi r^2 dr dt
double block_l2(const Trajectory& traj, const DyadicRegionSpec& block, const VFWord& word) {
    FieldEval ev(traj, word);
    double acc = 0.0;
    const double dr = traj.dr();
    const double dt = traj.snap_dt();
    for (int i = ev.snap_margin(); i < traj.n_snaps() - ev.snap_margin(); ++i) {
        double t = traj.times[i];
        for (int j = std::max(1, ev.cell_margin());
             j < traj.n_points() - ev.cell_margin(); ++j) {
            double r = traj.r(j);
            if (!block.contains(t, r)) continue;
            double v = ev.at(i, j);
            acc += v * v * kFourPi * r * r * dr * dt;
        }
    }
    return std::sqrt(acc);
}

// LE-type norms restricted to a block: weight w(r) = <r>^(pm 1/2), annular
// decomposition base 2, sup or sum over annuli; integrand may be the field,
// the gradient magnitude, <r>^-1 field, or <r>^(+1) field.
enum class Integrand { field, gradient, low_field, r_gradient, nonlinearity };

double block_le(const Trajectory& traj, const DyadicRegionSpec& block, Integrand what,
                bool star) {
    const double dr = traj.dr();
    const double dt = traj.snap_dt();
    int n_ann = static_cast<int>(std::floor(std::log2(jap(traj.r(traj.n_points() - 1))))) + 1;
    std::vector<double> acc(n_ann, 0.0);
    const auto& cfg = traj.config;
    for (int i = 0; i < traj.n_snaps(); ++i) {
        double t = traj.times[i];
        for (int j = 1; j < traj.n_points() - 1; ++j) {
            double r = traj.r(j);
            if (!block.contains(t, r)) continue;
            double w = jap(r);
            double q = 0.0;
            switch (what) {
                case Integrand::field: q = traj.phi[i][j]; break;
                case Integrand::gradient: {
                    double phi_r = (traj.phi[i][j + 1] - traj.phi[i][j - 1]) / (2.0 * dr);
                    q = std::sqrt(traj.pi[i][j] * traj.pi[i][j] + phi_r * phi_r);
                    break;
                }
                case Integrand::low_field: q = traj.phi[i][j] / w; break;
                case Integrand::r_gradient: {
                    // gradient of <r> phi, triangle-bounded
                    double phi_r = (traj.phi[i][j + 1] - traj.phi[i][j - 1]) / (2.0 * dr);
                    double g = std::sqrt(traj.pi[i][j] * traj.pi[i][j] + phi_r * phi_r);
                    q = w * g + std::abs(traj.phi[i][j]);
                    break;
                }
                case Integrand::nonlinearity: {
                    double phi_r = (traj.phi[i][j + 1] - traj.phi[i][j - 1]) / (2.0 * dr);
                    double pi = traj.pi[i][j];
                    switch (cfg.nonlinearity) {
                        case Nonlinearity::null_form:
                            q = cfg.null_scale * (-pi * pi + phi_r * phi_r);
                            break;
                        case Nonlinearity::square_dt_phi: q = pi * pi; break;
                        case Nonlinearity::none: q = 0.0; break;
                    }
                    break;
                }
            }
            double weight = star ? w : 1.0 / w;
            int a = static_cast<int>(std::floor(std::log2(w)));
            acc[a] += q * q * weight * kFourPi * r * r * dr * dt;
        }
    }
    if (star) {
        double sum = 0.0;
        for (double v : acc) sum += std::sqrt(v);
        return sum;
    }
    double sup = 0.0;
    for (double v : acc) sup = std::max(sup, v);
    return std::sqrt(sup);
}

void require_resolution(const Trajectory& traj, double smaller_scale) {
    if (smaller_scale / traj.dr() < 32.0)
        throw Error(Errc::resolution_error,
                    "block under-resolved: need >= 32 cells across the smaller scale");
}

}  // namespace

std::string check_name(CheckKind k) {
    switch (k) {
        case CheckKind::cone_hardy: return "cone_hardy";
        case CheckKind::sobolev_u: return "sobolev_U";
        case CheckKind::sobolev_r_in: return "sobolev_R_in";
        case CheckKind::sobolev_r_out: return "sobolev_R_out";
        case CheckKind::sobolev_rr: return "sobolev_RR";
        case CheckKind::klainerman_sideris: return "klainerman_sideris";
        case CheckKind::morawetz_dyadic: return "morawetz_dyadic";
        case CheckKind::morawetz_interior: return "morawetz_interior";
    }
    return "?";
}

CheckKind check_parse(const std::string& name) {
    for (CheckKind k : {CheckKind::cone_hardy, CheckKind::sobolev_u, CheckKind::sobolev_r_in,
                        CheckKind::sobolev_r_out, CheckKind::sobolev_rr,
                        CheckKind::klainerman_sideris, CheckKind::morawetz_dyadic,
                        CheckKind::morawetz_interior})
        if (check_name(k) == name) return k;
    throw Error(Errc::domain_error, "unknown check kind: " + name);
}

CheckReport check_cone_hardy(const SyntheticField& f, double t) {
    const int n = 4096;
    auto sq = [](double x) { return x * x; };
    double lhs = simpson(
        [&](double r) { return sq(f.value(t, r)) / sq(jap(t - r)) * kFourPi * r * r; },
        t / 2.0, 1.5 * t, n);
    double grad = simpson([&](double r) { return sq(f.dr_value(t, r)) * kFourPi * r * r; },
                          t / 4.0, 1.75 * t, n);
    double edge = simpson([&](double r) { return sq(f.value(t, r)) * kFourPi * r * r; },
                          t / 4.0, t / 2.0, n) +
                  simpson([&](double r) { return sq(f.value(t, r)) * kFourPi * r * r; },
                          1.5 * t, 1.75 * t, n);
    CheckReport rep;
    rep.kind = CheckKind::cone_hardy;
    rep.T = t;
    rep.lhs = lhs;
    rep.rhs = grad + edge / (t * t);
    rep.ratio = rep.lhs / rep.rhs;
    return rep;
}

CheckReport check_sobolev(CheckKind kind, const Trajectory& traj, double T, double scale2) {
    RegionKind rk;
    VFWord deriv;
    double vol_factor, deriv_factor;
    switch (kind) {
        case CheckKind::sobolev_u:
            rk = RegionKind::ctu;
            deriv = parse_word("r");
            vol_factor = std::sqrt(T * T * T * scale2);
            deriv_factor = std::sqrt(scale2 / (T * T * T));
            break;
        case CheckKind::sobolev_r_in:
            rk = RegionKind::ctr;
            deriv = parse_word("r");
            vol_factor = std::sqrt(scale2 * scale2 * scale2 * T);
            deriv_factor = 1.0 / std::sqrt(scale2 * T);
            break;
        case CheckKind::sobolev_r_out:
            rk = RegionKind::crt;
            deriv = parse_word("t");
            vol_factor = std::sqrt(scale2 * scale2 * scale2 * T);
            deriv_factor = 1.0 / std::sqrt(scale2 * T);
            break;
        case CheckKind::sobolev_rr:
            rk = RegionKind::crr;
            deriv = parse_word("t");
            vol_factor = scale2 * scale2;
            deriv_factor = 1.0 / scale2;
            break;
        default:
            throw Error(Errc::domain_error, "not a Sobolev check kind");
    }
    require_resolution(traj, std::min(T, scale2));
    DyadicRegionSpec block(rk, T, scale2);

    double rhs = 0.0;
    // scaling-field words up to one letter; rotations drop radially
    for (const std::string& base : {std::string(""), std::string("S")}) {
        rhs += block_l2(traj, block, parse_word(base)) / vol_factor;
        VFWord dw = deriv;
        VFWord bw = parse_word(base);
        dw.insert(dw.end(), bw.begin(), bw.end());
        rhs += deriv_factor * block_l2(traj, block, dw);
    }
    NormReport sup = region_sup(traj, block, {});
    CheckReport rep;
    rep.kind = kind;
    rep.T = T;
    rep.scale2 = scale2;
    rep.lhs = sup.value;
    rep.rhs = rhs;
    rep.ratio = rhs > 0.0 ? rep.lhs / rhs : 0.0;
    return rep;
}

CheckReport check_klainerman_sideris(const Trajectory& traj, double T, double R,
                                     double r_min) {
    require_resolution(traj, std::min(T, R));
    DyadicRegionSpec block(RegionKind::ctr, T, R);
    FieldEval dtt(traj, parse_word("tt")), dtr(traj, parse_word("tr")),
        drr(traj, parse_word("rr"));
    std::vector<FieldEval> first;   // gradient components of phi and Z phi
    for (const char* w : {"t", "r", "tt", "tr", "rt", "rr", "tS", "rS"})
        first.emplace_back(traj, parse_word(w));
    std::vector<FieldEval> zero;    // phi_{<=2}
    for (const char* w : {"", "t", "r", "S", "tt", "tr", "rr", "SS", "tS", "rS"})
        zero.emplace_back(traj, parse_word(w));

    const auto& cfg = traj.config;
    double worst_ratio = 0.0, worst_lhs = 0.0, worst_rhs = 1.0;
    bool hit = false;
    int snap_stride = std::max(1, traj.n_snaps() / 64);
    int cell_stride = std::max(1, traj.n_points() / 512);
    for (int i = 2; i < traj.n_snaps() - 2; i += snap_stride) {
        double t = traj.times[i];
        for (int j = 2; j < traj.n_points() - 2; j += cell_stride) {
            double r = traj.r(j);
            if (!block.contains(t, r) || r < r_min) continue;
            hit = true;
            double lhs = std::max({std::abs(dtt.at(i, j)), std::abs(dtr.at(i, j)),
                                   std::abs(drr.at(i, j))});
            double grad1 = 0.0;
            for (auto& f : first) grad1 = std::max(grad1, std::abs(f.at(i, j)));
            double low2 = 0.0;
            for (auto& f : zero) low2 = std::max(low2, std::abs(f.at(i, j)));
            double u = jap(t - r);
            double pi = traj.pi[i][j];
            double phi_r = (traj.phi[i][j + 1] - traj.phi[i][j - 1]) / (2.0 * traj.dr());
            double p_phi = 0.0;
            if (cfg.nonlinearity == Nonlinearity::null_form)
                p_phi = cfg.null_scale * (-pi * pi + phi_r * phi_r);
            else if (cfg.nonlinearity == Nonlinearity::square_dt_phi)
                p_phi = pi * pi;
            double rhs = (1.0 / jap(r) + 1.0 / u) * grad1 +
                         (1.0 + t / u) * (low2 / (jap(r) * jap(r)) + std::abs(p_phi));
            if (rhs <= 0.0) continue;
            double ratio = lhs / rhs;
            if (ratio > worst_ratio) {
                worst_ratio = ratio;
                worst_lhs = lhs;
                worst_rhs = rhs;
            }
        }
    }
    if (!hit) throw Error(Errc::empty_region, "no sampled point in the block");
    CheckReport rep;
    rep.kind = CheckKind::klainerman_sideris;
    rep.T = T;
    rep.scale2 = R;
    rep.lhs = worst_lhs;
    rep.rhs = worst_rhs;
    rep.ratio = worst_ratio;
    return rep;
}

CheckReport check_morawetz_dyadic(const Trajectory& traj, double T, double R) {
    require_resolution(traj, std::min(T, R));
    DyadicRegionSpec block(RegionKind::ctr, T, R);
    // slight enlargement on the block's own scales
    auto contains_big = [&](double t, double r) {
        bool time_ok = t >= 0.75 * T && t <= 2.5 * T;
        bool rad_ok = R > 1.0 ? (r > 0.5 * R && r < 4.0 * R) : (r < 4.0);
        return time_ok && rad_ok && r <= t;
    };

    const double dr = traj.dr();
    const double dt = traj.snap_dt();
    double lhs = 0.0, low = 0.0, forcing = 0.0;
    const auto& cfg = traj.config;
    for (int i = 0; i < traj.n_snaps(); ++i) {
        double t = traj.times[i];
        for (int j = 1; j < traj.n_points() - 1; ++j) {
            double r = traj.r(j);
            double cell = kFourPi * r * r * dr * dt;
            double phi_r = (traj.phi[i][j + 1] - traj.phi[i][j - 1]) / (2.0 * dr);
            double pi = traj.pi[i][j];
            if (block.contains(t, r)) lhs += (pi * pi + phi_r * phi_r) * cell;
            if (contains_big(t, r)) {
                double nu = std::min(jap(r), jap(t - r));
                double f = traj.phi[i][j] / nu;
                low += f * f * cell;
                double q = 0.0;
                if (cfg.nonlinearity == Nonlinearity::null_form)
                    q = cfg.null_scale * (-pi * pi + phi_r * phi_r);
                else if (cfg.nonlinearity == Nonlinearity::square_dt_phi)
                    q = pi * pi;
                forcing += jap(r) * jap(r) * q * q * cell;
            }
        }
    }
    CheckReport rep;
    rep.kind = CheckKind::morawetz_dyadic;
    rep.T = T;
    rep.scale2 = R;
    rep.lhs = std::sqrt(lhs);
    rep.rhs = std::sqrt(low) + std::sqrt(forcing);
    rep.ratio = rep.rhs > 0.0 ? rep.lhs / rep.rhs : 0.0;
    return rep;
}

CheckReport check_morawetz_interior(const Trajectory& traj, double T) {
    require_resolution(traj, T);
    DyadicRegionSpec bulk(RegionKind::interior_bulk, T);
    double lhs = block_le(traj, bulk, Integrand::gradient, false) +
                 block_le(traj, bulk, Integrand::low_field, false);
    double rphi = block_le(traj, bulk, Integrand::r_gradient, false) +
                  block_le(traj, bulk, Integrand::field, false);
    double q = block_le(traj, bulk, Integrand::nonlinearity, true);
    CheckReport rep;
    rep.kind = CheckKind::morawetz_interior;
    rep.T = T;
    rep.lhs = lhs;
    rep.rhs = rphi / T + q;
    rep.ratio = rep.rhs > 0.0 ? rep.lhs / rep.rhs : 0.0;
    return rep;
}

}  // namespace wavedecay
