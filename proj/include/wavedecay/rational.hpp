#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

namespace wavedecay {

// Exact rational with 64-bit numerator/denominator, always in lowest terms,
// denominator > 0.  Exponent arithmetic in the decay engine stays tiny, but
// comparisons and products go through 128-bit intermediates so the type is
// safe well past anything the iterations produce.
class Rational {
  public:
    constexpr Rational() : num_(0), den_(1) {}
    Rational(std::int64_t n) : num_(n), den_(1) {}
    Rational(std::int64_t n, std::int64_t d);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b);
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    // "n" when integral, "n/d" otherwise.
    std::string str() const;

    // Parses "n" or "n/d"; throws Error(domain_error) on malformed input.
    static Rational parse(const std::string& text);

  private:
    void normalize();
    std::int64_t num_;
    std::int64_t den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

inline Rational rat(std::int64_t n, std::int64_t d = 1) { return Rational(n, d); }

}  // namespace wavedecay
