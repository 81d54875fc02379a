#pragma once

#include <cstddef>
#include <vector>

#include "besselrad/rational.hpp"

namespace besselrad {

/// Dense univariate polynomial over the rationals, lowest degree first. The
/// highest stored coefficient is nonzero unless the polynomial is zero, in
/// which case the coefficient list is empty.
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<Rational> coefficients);

  const std::vector<Rational>& coefficients() const { return coefficients_; }
  bool is_zero() const { return coefficients_.empty(); }
  /// Degree, with -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coefficients_.size()) - 1; }
  Rational coefficient(std::size_t i) const;

  /// Exact Horner evaluation.
  Rational operator()(const Rational& x) const;

  friend RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b);
  friend RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b);
  friend bool operator==(const RationalPolynomial&, const RationalPolynomial&) = default;

 private:
  void trim();
  std::vector<Rational> coefficients_;
};

inline Rational poly_eval(const RationalPolynomial& p, const Rational& x) { return p(x); }

}  // namespace besselrad
