#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace archimedean {

/// Exact fraction over int64, always in lowest terms with a positive
/// denominator. Every feasibility computation in this library runs on
/// these; no floating point appears anywhere on the proof path.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t n) : num_(n) {}  // NOLINT: implicit by design
  constexpr Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) {
    reduce();
  }

  constexpr std::int64_t numerator() const { return num_; }
  constexpr std::int64_t denominator() const { return den_; }

  constexpr bool is_integer() const { return den_ == 1; }
  constexpr bool is_zero() const { return num_ == 0; }
  constexpr bool is_positive() const { return num_ > 0; }
  constexpr bool is_negative() const { return num_ < 0; }

  constexpr Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  constexpr Rational operator+(const Rational& o) const {
    return {num_ * o.den_ + o.num_ * den_, den_ * o.den_};
  }
  constexpr Rational operator-(const Rational& o) const {
    return {num_ * o.den_ - o.num_ * den_, den_ * o.den_};
  }
  constexpr Rational operator*(const Rational& o) const {
    return {num_ * o.num_, den_ * o.den_};
  }
  constexpr Rational operator/(const Rational& o) const {
    if (o.num_ == 0) throw std::domain_error("Rational: division by zero");
    return {num_ * o.den_, den_ * o.num_};
  }

  constexpr Rational& operator+=(const Rational& o) { return *this = *this + o; }
  constexpr Rational& operator-=(const Rational& o) { return *this = *this - o; }
  constexpr Rational& operator*=(const Rational& o) { return *this = *this * o; }
  constexpr Rational& operator/=(const Rational& o) { return *this = *this / o; }

  constexpr bool operator==(const Rational& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  constexpr std::strong_ordering operator<=>(const Rational& o) const {
    // a/b <=> c/d iff ad <=> cb, both denominators positive
    return num_ * o.den_ <=> o.num_ * den_;
  }

  /// "24" or "84/5".
  std::string str() const {
    std::string s = std::to_string(num_);
    if (den_ != 1) s += "/" + std::to_string(den_);
    return s;
  }

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;

  constexpr void reduce() {
    if (den_ == 0) throw std::domain_error("Rational: zero denominator");
    if (num_ == 0) {
      den_ = 1;
      return;
    }
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    const std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    num_ /= g;
    den_ /= g;
  }
};

}  // namespace archimedean
