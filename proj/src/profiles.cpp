#include "wavedecay/profiles.hpp"

#include <cmath>
#include <cstdint>
#include <sstream>

#include "wavedecay/errors.hpp"

namespace wavedecay {

void Grid1D::validate(double t_final, double support_radius) const {
    if (n_cells <= 0 || r_max <= 0.0)
        throw Error(Errc::config_error, "grid needs positive size and cell count");
    if (cfl <= 0.0 || cfl > 0.5 + 1e-12)
        throw Error(Errc::config_error, "time step violates the stability bound dt/dr <= 0.5");
    if (r_max < t_final + support_radius + 4.0 * dr())
        throw Error(Errc::config_error,
                    "outer boundary too close: need r_max >= t_final + support + 4 dr");
}

namespace {
inline double inv_pow_profile(double r, double k) {
    return std::pow(1.0 + r * r, -0.5 * k);
}
inline double inv_pow_profile_deriv(double r, double k) {
    return -k * r * std::pow(1.0 + r * r, -0.5 * k - 1.0);
}
}  // namespace

void CoefficientProfile::validate() const {
    for (double a : {amp_h, amp_br, amp_b0, amp_v, amp_gw})
        if (std::abs(a) > 0.1)
            throw Error(Errc::config_error, "coefficient amplitude exceeds the 0.1 cap");
    if (!(sigma > Rational(0)))
        throw Error(Errc::config_error, "coefficient decay surcharge must be positive");
}

double CoefficientProfile::h(double r) const {
    return amp_h * inv_pow_profile(r, 1.0 + sigma.to_double());
}
double CoefficientProfile::dh(double r) const {
    return amp_h * inv_pow_profile_deriv(r, 1.0 + sigma.to_double());
}
double CoefficientProfile::br(double r) const {
    return amp_br * inv_pow_profile(r, 1.0 + sigma.to_double());
}
double CoefficientProfile::b0(double r) const {
    return amp_b0 * inv_pow_profile(r, 1.0 + sigma.to_double());
}
double CoefficientProfile::v(double r) const {
    return amp_v * inv_pow_profile(r, 2.0 + sigma.to_double());
}
double CoefficientProfile::gw(double r) const {
    return amp_gw * inv_pow_profile(r, 2.0 + sigma.to_double());
}

NullFormCoeffs::NullFormCoeffs(const std::array<std::array<double, 4>, 4>& s) : s_(s) {
    double norm = 0.0;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            if (std::abs(s[a][b] - s[b][a]) > 1e-14)
                throw Error(Errc::null_condition_violated, "coefficients must be symmetric");
            norm = std::max(norm, std::abs(s[a][b]));
        }
    if (norm == 0.0) norm = 1.0;
    // null covectors xi = (1, w) with |w| = 1: axes, diagonals and a golden
    // spiral sample
    auto check = [&](double w1, double w2, double w3) {
        double n = std::sqrt(w1 * w1 + w2 * w2 + w3 * w3);
        double xi[4] = {1.0, w1 / n, w2 / n, w3 / n};
        double q = 0.0;
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b) q += s[a][b] * xi[a] * xi[b];
        if (std::abs(q) > 1e-10 * norm)
            throw Error(Errc::null_condition_violated,
                        "quadratic form does not vanish on a null covector");
    };
    check(1, 0, 0);
    check(-1, 0, 0);
    check(0, 1, 0);
    check(0, 0, 1);
    check(1, 1, 1);
    check(-1, 1, -1);
    for (int k = 0; k < 1000; ++k) {
        double z = 1.0 - 2.0 * (k + 0.5) / 1000.0;
        double phi_ang = 2.399963229728653 * k;  // golden angle
        double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
        check(rho * std::cos(phi_ang), rho * std::sin(phi_ang), z);
    }
    scale_ = s[1][1];
}

NullFormCoeffs NullFormCoeffs::minkowski(double scale) {
    std::array<std::array<double, 4>, 4> s{};
    s[0][0] = -scale;
    s[1][1] = s[2][2] = s[3][3] = scale;
    return NullFormCoeffs(s);
}

double null_form_eval(double dt_phi, double dr_phi, double angular_terms,
                      const NullFormCoeffs& coeffs) {
    return coeffs.scale() * (-dt_phi * dt_phi + dr_phi * dr_phi + angular_terms);
}

void InitialData::validate() const {
    if (epsilon < 0.0) throw Error(Errc::config_error, "data amplitude must be nonnegative");
    if (support_radius <= 0.0)
        throw Error(Errc::config_error, "data support radius must be positive");
    if (profile == DataProfile::gaussian && support_radius < 5.0 * width)
        throw Error(Errc::config_error,
                    "gaussian truncation needs support_radius >= 5 * width");
}

namespace {
// quintic ramp: 0 below 0, 1 above 1
inline double smoothstep5(double x) {
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    return x * x * x * (10.0 + x * (-15.0 + 6.0 * x));
}
inline double smoothstep5_deriv(double x) {
    if (x <= 0.0 || x >= 1.0) return 0.0;
    return x * x * (30.0 + x * (-60.0 + 30.0 * x));
}
}  // namespace

double InitialData::shape(double r) const {
    r = std::abs(r);
    switch (profile) {
        case DataProfile::gaussian:
            return r <= support_radius ? std::exp(-(r / width) * (r / width)) : 0.0;
        case DataProfile::bump: {
            if (r >= support_radius) return 0.0;
            double x = r / support_radius;
            double q = 1.0 - x * x;
            return q * q * q * q;
        }
        case DataProfile::inverse_square: {
            if (r >= support_radius) return 0.0;
            double ramp_w = 0.25 * support_radius;
            return smoothstep5((support_radius - r) / ramp_w) / (1.0 + r * r);
        }
    }
    return 0.0;
}

double InitialData::dshape(double r) const {
    double sign = r < 0.0 ? -1.0 : 1.0;
    r = std::abs(r);
    switch (profile) {
        case DataProfile::gaussian:
            return r <= support_radius
                       ? sign * (-2.0 * r / (width * width)) *
                             std::exp(-(r / width) * (r / width))
                       : 0.0;
        case DataProfile::bump: {
            if (r >= support_radius) return 0.0;
            double x = r / support_radius;
            double q = 1.0 - x * x;
            return sign * 4.0 * q * q * q * (-2.0 * x / support_radius);
        }
        case DataProfile::inverse_square: {
            if (r >= support_radius) return 0.0;
            double ramp_w = 0.25 * support_radius;
            double s = smoothstep5((support_radius - r) / ramp_w);
            double ds = -smoothstep5_deriv((support_radius - r) / ramp_w) / ramp_w;
            double f = 1.0 / (1.0 + r * r);
            double df = -2.0 * r * f * f;
            return sign * (ds * f + s * df);
        }
    }
    return 0.0;
}

void SimConfig::validate() const {
    grid.validate(t_final, data.support_radius);
    coeffs.validate();
    data.validate();
    if (record_stride <= 0) throw Error(Errc::config_error, "record_stride must be positive");
    if (mode_ell < 0) throw Error(Errc::config_error, "mode_ell must be nonnegative");
    if (nonlinearity != Nonlinearity::none && mode_ell != 0)
        throw Error(Errc::config_error,
                    "nonlinear runs evolve in exact radial symmetry (mode_ell = 0)");
}

std::string nonlinearity_name(Nonlinearity n) {
    switch (n) {
        case Nonlinearity::null_form: return "nullform";
        case Nonlinearity::square_dt_phi: return "square_dt_phi";
        case Nonlinearity::none: return "none";
    }
    return "?";
}

std::string profile_name(DataProfile p) {
    switch (p) {
        case DataProfile::gaussian: return "gaussian";
        case DataProfile::bump: return "bump";
        case DataProfile::inverse_square: return "inverse_square";
    }
    return "?";
}

namespace {
double parse_double(const std::string& v, const std::string& key) {
    try {
        std::size_t pos = 0;
        double d = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return d;
    } catch (const std::exception&) {
        throw Error(Errc::config_error, "bad numeric value for " + key + ": " + v);
    }
}
int parse_int(const std::string& v, const std::string& key) {
    try {
        std::size_t pos = 0;
        int n = std::stoi(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return n;
    } catch (const std::exception&) {
        throw Error(Errc::config_error, "bad integer value for " + key + ": " + v);
    }
}
}  // namespace

SimConfig SimConfig::from_text(const std::string& text) {
    std::map<std::string, std::string> kv;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        // trim
        auto b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        auto e = line.find_last_not_of(" \t\r");
        line = line.substr(b, e - b + 1);
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw Error(Errc::config_error, "expected key=value, got: " + line);
        std::string key = line.substr(0, eq);
        std::string val = line.substr(eq + 1);
        while (!key.empty() && (key.back() == ' ' || key.back() == '\t')) key.pop_back();
        while (!val.empty() && (val.front() == ' ' || val.front() == '\t')) val.erase(0, 1);
        kv[key] = val;
    }

    SimConfig cfg;
    for (const auto& [key, val] : kv) {
        if (key == "n_cells") cfg.grid.n_cells = parse_int(val, key);
        else if (key == "r_max") cfg.grid.r_max = parse_double(val, key);
        else if (key == "cfl") cfg.grid.cfl = parse_double(val, key);
        else if (key == "t_final") cfg.t_final = parse_double(val, key);
        else if (key == "record_stride") cfg.record_stride = parse_int(val, key);
        else if (key == "mode_ell") cfg.mode_ell = parse_int(val, key);
        else if (key == "sigma") cfg.coeffs.sigma = Rational::parse(val);
        else if (key == "amp_h") cfg.coeffs.amp_h = parse_double(val, key);
        else if (key == "amp_br") cfg.coeffs.amp_br = parse_double(val, key);
        else if (key == "amp_b0") cfg.coeffs.amp_b0 = parse_double(val, key);
        else if (key == "amp_v") cfg.coeffs.amp_v = parse_double(val, key);
        else if (key == "amp_gw") cfg.coeffs.amp_gw = parse_double(val, key);
        else if (key == "null_scale") cfg.null_scale = parse_double(val, key);
        else if (key == "epsilon") cfg.data.epsilon = parse_double(val, key);
        else if (key == "width") cfg.data.width = parse_double(val, key);
        else if (key == "support_radius") cfg.data.support_radius = parse_double(val, key);
        else if (key == "velocity_factor") cfg.data.velocity_factor = parse_double(val, key);
        else if (key == "profile") {
            if (val == "gaussian") cfg.data.profile = DataProfile::gaussian;
            else if (val == "bump") cfg.data.profile = DataProfile::bump;
            else if (val == "inverse_square") cfg.data.profile = DataProfile::inverse_square;
            else throw Error(Errc::config_error, "unknown data profile: " + val);
        } else if (key == "nonlinearity") {
            if (val == "nullform") cfg.nonlinearity = Nonlinearity::null_form;
            else if (val == "square_dt_phi") cfg.nonlinearity = Nonlinearity::square_dt_phi;
            else if (val == "none") cfg.nonlinearity = Nonlinearity::none;
            else throw Error(Errc::config_error, "unknown nonlinearity: " + val);
        } else {
            throw Error(Errc::config_error, "unknown config key: " + key);
        }
    }
    cfg.validate();
    return cfg;
}

std::string SimConfig::canonical_text() const {
    std::ostringstream os;
    os.precision(17);
    os << "amp_b0=" << coeffs.amp_b0 << "\n";
    os << "amp_br=" << coeffs.amp_br << "\n";
    os << "amp_gw=" << coeffs.amp_gw << "\n";
    os << "amp_h=" << coeffs.amp_h << "\n";
    os << "amp_v=" << coeffs.amp_v << "\n";
    os << "cfl=" << grid.cfl << "\n";
    os << "epsilon=" << data.epsilon << "\n";
    os << "mode_ell=" << mode_ell << "\n";
    os << "n_cells=" << grid.n_cells << "\n";
    os << "nonlinearity=" << nonlinearity_name(nonlinearity) << "\n";
    os << "null_scale=" << null_scale << "\n";
    os << "profile=" << profile_name(data.profile) << "\n";
    os << "r_max=" << grid.r_max << "\n";
    os << "record_stride=" << record_stride << "\n";
    os << "sigma=" << coeffs.sigma << "\n";
    os << "support_radius=" << data.support_radius << "\n";
    os << "t_final=" << t_final << "\n";
    os << "velocity_factor=" << data.velocity_factor << "\n";
    os << "width=" << data.width << "\n";
    return os.str();
}

std::string config_hash(const SimConfig& cfg) {
    std::string text = cfg.canonical_text();
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

}  // namespace wavedecay
