#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace besselrad {

using Integer = mpz_class;

/// Exact rational number, always kept in lowest terms with a positive
/// denominator. Arithmetic never rounds; division by zero throws
/// Error(DivisionByZero).
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(long numerator, long denominator);
  explicit Rational(const Integer& value);
  Rational(const Integer& numerator, const Integer& denominator);

  /// Accepts "p/q", integers, and decimals with an optional exponent
  /// ("0.125", "-3", "7/3", "1e-10", "2.5E3"). Decimal input is converted
  /// exactly through a power-of-ten denominator.
  static Rational parse(std::string_view text);

  /// Exact value of a finite double. Throws InvalidArgument for NaN or inf.
  static Rational from_double(double value);

  static Rational pow2(long exponent);
  static Rational pow10(long exponent);

  Integer numerator() const { return value_.get_num(); }
  Integer denominator() const { return value_.get_den(); }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& lhs, const Rational& rhs) {
    return cmp(lhs.value_, rhs.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    const int c = cmp(lhs.value_, rhs.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// Integer power; negative exponents invert (0^-n throws DivisionByZero).
  Rational pow(long exponent) const;
  Rational abs() const;
  Rational reciprocal() const;

  Integer floor() const;
  Integer ceil() const;

  /// Nearest rational with denominator 2^bits (ties away from zero). Used to
  /// cap coefficient growth in numerically-motivated computations only.
  Rational round_dyadic(unsigned bits) const;

  /// Bit length of numerator plus denominator; a size measure for tests.
  std::size_t bit_size() const;

  double to_double() const { return value_.get_d(); }
  /// "p/q", or "p" when the denominator is 1.
  std::string str() const;

  const mpq_class& raw() const { return value_; }

 private:
  explicit Rational(mpq_class value);
  mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& value);

Rational min(const Rational& a, const Rational& b);
Rational max(const Rational& a, const Rational& b);

/// Result of an enclosed k-th root: lo <= x^(1/k) <= hi, with hi - lo <= 2^-bits
/// and lo == hi exactly when the root is rational.
struct RootEnclosure {
  Rational lo;
  Rational hi;
  bool exact = false;
};

/// k-th root of a non-negative rational, enclosed between multiples of 2^-bits.
RootEnclosure kth_root(const Rational& x, unsigned k, unsigned bits);

/// Smallest n >= 0 with value <= goal * 2^n (value, goal > 0).
unsigned ceil_log2_ratio(const Rational& value, const Rational& goal);

}  // namespace besselrad
