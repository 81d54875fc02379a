#include "besselrad/bisection.hpp"

#include <array>

namespace besselrad {

namespace {

constexpr int kRetries = 3;

Sign query_endpoint(const SignOracle& oracle, const Rational& x) {
  Sign s = oracle(x);
  for (int i = 0; i < kRetries && s == Sign::Unknown; ++i) s = oracle(x);
  return s;
}

}  // namespace

CertifiedInterval bisect_smallest_root(const SignOracle& oracle, const CertifiedInterval& bracket,
                                       const Rational& width_goal, std::optional<std::size_t> max_steps) {
  if (width_goal.sign() <= 0) throw Error(ErrorKind::InvalidArgument, "width goal must be positive");

  Rational lo = bracket.lo();
  Rational hi = bracket.hi();
  const Sign s_lo = query_endpoint(oracle, lo);
  const Sign s_hi = query_endpoint(oracle, hi);
  if (s_lo == Sign::Unknown || s_hi == Sign::Unknown) {
    throw Error(ErrorKind::BracketInvalid, "endpoint sign could not be certified");
  }
  if (s_lo == Sign::Zero) return CertifiedInterval::point(lo);
  if (s_hi == Sign::Zero) return CertifiedInterval::point(hi);
  if (s_lo == s_hi) {
    throw Error(ErrorKind::BracketInvalid, "bracket endpoints [" + lo.str() + ", " + hi.str() +
                                               "] have the same sign");
  }

  Rational width = hi - lo;
  if (width <= width_goal) return {lo, hi};
  const std::size_t budget = max_steps.value_or(4 * static_cast<std::size_t>(ceil_log2_ratio(width, width_goal)));

  std::size_t steps = 0;
  while (width > width_goal) {
    if (steps == budget) {
      throw Error(ErrorKind::NoConvergence, "bisection step budget exhausted at width " + width.str());
    }
    ++steps;
    const Rational mid = (lo + hi) / 2;
    const std::array<Rational, kRetries + 1> candidates = {mid, mid - width / 4, mid + width / 4, mid - width / 8};
    bool advanced = false;
    for (const Rational& p : candidates) {
      const Sign s = oracle(p);
      if (s == Sign::Unknown) continue;
      if (s == Sign::Zero) return CertifiedInterval::point(p);
      if (s == s_lo) {
        lo = p;
      } else {
        hi = p;
      }
      advanced = true;
      break;
    }
    if (!advanced) {
      throw Error(ErrorKind::NoConvergence, "sign oracle undecided near " + mid.str());
    }
    width = hi - lo;
  }
  return {lo, hi};
}

}  // namespace besselrad
