#include "wavedecay/regions.hpp"

#include <cmath>
#include <sstream>

#include "wavedecay/errors.hpp"

namespace wavedecay {

DyadicRegionSpec::DyadicRegionSpec(RegionKind k, double t_scale, double second)
    : kind(k), T(t_scale), scale2(second) {
    if (T < 1.0 || scale2 < 1.0)
        throw Error(Errc::domain_error, "dyadic scales must be at least 1");
    switch (kind) {
        case RegionKind::ctr:
        case RegionKind::ctu:
            if (scale2 > 3.0 * T / 8.0)
                throw Error(Errc::domain_error, "secondary scale exceeds the 3T/8 cap");
            break;
        case RegionKind::crt:
        case RegionKind::crr:
            if (!(scale2 > T))
                throw Error(Errc::domain_error, "far-field blocks need R > T");
            break;
        case RegionKind::annulus:
        case RegionKind::interior_bulk:
            break;
    }
}

bool DyadicRegionSpec::contains(double t, double r) const {
    auto in_time = [&](double lo, double hi) { return t >= lo && t <= hi; };
    switch (kind) {
        case RegionKind::ctr: {
            bool time_ok = T > 1.0 ? in_time(T, 2.0 * T) : (t > 0.0 && t < 2.0);
            if (!time_ok || r > t) return false;
            return scale2 > 1.0 ? (r > scale2 && r < 2.0 * scale2) : (r < 2.0);
        }
        case RegionKind::ctu: {
            if (!in_time(T, 2.0 * T)) return false;
            double d = std::abs(t - r);
            return scale2 > 1.0 ? (d > scale2 && d < 2.0 * scale2) : (d < 2.0);
        }
        case RegionKind::crt:
            return r >= t && in_time(T, 2.0 * T) && r >= scale2 && r <= 2.0 * scale2 &&
                   std::abs(r - t) >= scale2 && std::abs(r - t) <= 2.0 * scale2;
        case RegionKind::crr:
            return t >= 1.0 && t <= scale2 && r >= scale2 && r <= 2.0 * scale2 &&
                   std::abs(r - t) >= 0.5 * scale2 && std::abs(r - t) <= 2.0 * scale2;
        case RegionKind::annulus: {
            double jr = std::sqrt(1.0 + r * r);
            return jr >= scale2 && jr <= 2.0 * scale2;
        }
        case RegionKind::interior_bulk:
            return in_time(T, 2.0 * T) && r <= t && r < 0.75 * T;
    }
    return false;
}

std::string DyadicRegionSpec::str() const {
    std::ostringstream os;
    switch (kind) {
        case RegionKind::ctr: os << "C_T^R(T=" << T << ",R=" << scale2 << ")"; break;
        case RegionKind::ctu: os << "C_T^U(T=" << T << ",U=" << scale2 << ")"; break;
        case RegionKind::crt: os << "C_R^T(T=" << T << ",R=" << scale2 << ")"; break;
        case RegionKind::crr: os << "C_R^R(R=" << scale2 << ")"; break;
        case RegionKind::annulus: os << "A_R(R=" << scale2 << ")"; break;
        case RegionKind::interior_bulk: os << "C_T^{<3T/4}(T=" << T << ")"; break;
    }
    return os.str();
}

}  // namespace wavedecay
