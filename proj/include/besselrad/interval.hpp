#pragma once

#include "besselrad/error.hpp"
#include "besselrad/rational.hpp"

namespace besselrad {

/// Closed interval [lo, hi] with exact rational endpoints, asserted to
/// contain some real quantity.
class CertifiedInterval {
 public:
  CertifiedInterval(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (hi_ < lo_) throw Error(ErrorKind::InvalidArgument, "interval with lo > hi");
  }
  static CertifiedInterval point(const Rational& x) { return {x, x}; }

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  Rational width() const { return hi_ - lo_; }
  Rational midpoint() const { return (lo_ + hi_) / 2; }

  bool contains(const Rational& x) const { return lo_ <= x && x <= hi_; }
  bool contains(const CertifiedInterval& other) const { return lo_ <= other.lo_ && other.hi_ <= hi_; }
  bool strictly_contains(const CertifiedInterval& other) const { return lo_ < other.lo_ && other.hi_ < hi_; }
  bool excludes_zero() const { return lo_.sign() > 0 || hi_.sign() < 0; }

  friend bool operator==(const CertifiedInterval&, const CertifiedInterval&) = default;

 private:
  Rational lo_;
  Rational hi_;
};

}  // namespace besselrad
