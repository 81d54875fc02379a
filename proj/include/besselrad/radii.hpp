#pragma once

#include <optional>
#include <string>
#include <vector>

#include "besselrad/asympt.hpp"
#include "besselrad/interval.hpp"
#include "besselrad/kinds.hpp"

namespace besselrad {

/// Euler-Rayleigh bracket S_k^(-1/k) < zero < S_k / S_{k+1} for the smallest
/// zero in the series variable (the squared radius for g-kinds).
struct BoundsBracket {
  SeriesFamily family;
  Rational nu;
  unsigned k;
  Rational lower;        // S_k^(-1/k), rounded down to a multiple of 2^-100 unless exact
  Rational upper;        // S_k / S_{k+1}, exact
  Rational lower_power;  // lower^k = 1 / S_k, exact
  bool lower_exact;      // lower is exactly S_k^(-1/k)
};

BoundsBracket euler_rayleigh_bracket(SeriesFamily family, const Order& nu, unsigned k);
BoundsBracket euler_rayleigh_bracket(RadiusKind kind, const Order& nu, unsigned k);

/// The alternative closed form 4 nu (nu+1) / (3 (4 nu - 1)) for the k = 1
/// uconv-g upper bound; a valid upper bound only for nu > 1/4.
Rational uconv_g_alternative_upper(const Rational& nu);

struct RadiusEnclosure {
  RadiusKind kind;
  Rational nu;
  CertifiedInterval zero;    // smallest zero of the critical series
  CertifiedInterval radius;  // sqrt(zero) for g-kinds, zero for h-kinds
};

inline const Rational& default_radius_tolerance() {
  static const Rational tol = Rational::pow10(-12);
  return tol;
}

/// Certified radius with radius width <= abs_tol, by bisection of the
/// critical series sign from the k = 3 Euler-Rayleigh bracket.
RadiusEnclosure direct_radius(RadiusKind kind, const Order& nu, const Rational& abs_tol = default_radius_tolerance());

/// 1 - W sum_{m=1}^{M} r^m S_m of the kind's Weierstrass family. r is in the
/// series variable. Throws ConvergenceDomain unless 0 <= r < the k = 2 lower
/// bracket of the Weierstrass family's smallest zero.
Rational mittag_leffler_residual(RadiusKind kind, const Order& nu, const Rational& r, unsigned m);

struct CompareOptions {
  unsigned n_terms = 2;
  unsigned k_max = 3;
  unsigned truncation = kDefaultTruncation;
  Convention convention = Convention::Published;
  Rational abs_tol = Rational::pow10(-10);
};

struct CompareRow {
  RadiusKind kind;
  Rational nu;
  std::vector<BoundsBracket> brackets;  // k = 1..k_max
  RadiusEnclosure oracle;
  std::optional<double> asymptotic;  // absent when the expansion is non-positive at nu
  double abs_gap = 0;
  double rel_gap = 0;
  std::vector<std::string> notes;  // "ok: ..." or "VIOLATION: ..."
  bool invariants_hold = true;
};

/// One row per (kind, nu), kinds outer, in input order. Rows are computed
/// concurrently.
std::vector<CompareRow> compare_report(const std::vector<RadiusKind>& kinds, const std::vector<Rational>& nus,
                                       const CompareOptions& options = {});

}  // namespace besselrad
