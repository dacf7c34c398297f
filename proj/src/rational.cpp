#include "wavedecay/rational.hpp"

#include <numeric>
#include <ostream>
#include <sstream>

#include "wavedecay/errors.hpp"

namespace wavedecay {

Rational::Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) {
    if (d == 0) throw Error(Errc::domain_error, "rational with zero denominator");
    normalize();
}

void Rational::normalize() {
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
    if (num_ == 0) den_ = 1;
}

Rational Rational::operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    std::int64_t g = std::gcd(den_, o.den_);
    std::int64_t lcm = den_ / g * o.den_;
    num_ = num_ * (lcm / den_) + o.num_ * (lcm / o.den_);
    den_ = lcm;
    normalize();
    return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
    std::int64_t g1 = std::gcd(num_ < 0 ? -num_ : num_, o.den_);
    std::int64_t g2 = std::gcd(o.num_ < 0 ? -o.num_ : o.num_, den_);
    num_ = (num_ / g1) * (o.num_ / g2);
    den_ = (den_ / g2) * (o.den_ / g1);
    normalize();
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.num_ == 0) throw Error(Errc::domain_error, "rational division by zero");
    return *this *= Rational(o.den_, o.num_);
}

bool operator<(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
}

std::string Rational::str() const {
    std::ostringstream os;
    os << num_;
    if (den_ != 1) os << '/' << den_;
    return os.str();
}

Rational Rational::parse(const std::string& text) {
    std::istringstream is(text);
    std::int64_t n = 0, d = 1;
    char slash = 0;
    if (!(is >> n)) throw Error(Errc::domain_error, "bad rational: " + text);
    if (is >> slash) {
        if (slash != '/' || !(is >> d))
            throw Error(Errc::domain_error, "bad rational: " + text);
    }
    std::string rest;
    if (is >> rest) throw Error(Errc::domain_error, "bad rational: " + text);
    return Rational(n, d);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace wavedecay
