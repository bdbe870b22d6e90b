#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace lange {

using Int = std::int64_t;

/// gcd with the convention gcd(n, 0) = |n|; always nonnegative.
inline Int gcd(Int a, Int b) { return std::gcd(a, b); }

/// Floor division for any sign of numerator; denominator must be nonzero.
inline Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

/// Exact rational, always stored reduced with a positive denominator.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(Int num) : num_(num) {}  // NOLINT(google-explicit-constructor)
  Rational(Int num, Int den) : num_(num), den_(den) {
    if (den_ == 0) throw std::domain_error("zero denominator");
    normalize();
  }

  Int numerator() const { return num_; }
  Int denominator() const { return den_; }

  Rational operator-() const { return Rational(-num_, den_); }
  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
  }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    __extension__ using Wide = __int128;
    const Wide lhs = static_cast<Wide>(a.num_) * b.den_;
    const Wide rhs = static_cast<Wide>(b.num_) * a.den_;
    return lhs <=> rhs;
  }

 private:
  void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    const Int g = std::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  Int num_ = 0;
  Int den_ = 1;
};

inline Int floor(const Rational& r) { return floor_div(r.numerator(), r.denominator()); }

/// Fractional part in [0, 1).
inline Rational frac(const Rational& r) { return r - Rational(floor(r)); }

/// Renders "a" for integers and "a/b" otherwise.
inline std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace lange
