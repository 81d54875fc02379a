#pragma once

#include <string_view>
#include <vector>

#include "besselrad/interval.hpp"
#include "besselrad/kinds.hpp"
#include "besselrad/polynomial.hpp"

namespace besselrad {

/// How the first Rayleigh row enters the master equation for the h-kinds.
/// Published: 3/4 (-1)^n for every kind, giving the constants 4/3 and 2/3
/// of the closed-form fixed points. Consistent: the row the theta
/// recurrence actually produces, (1/2)(-1)^n. Identical for g-kinds.
enum class Convention { Published, Consistent };

std::string_view to_string(Convention convention) noexcept;
Convention parse_convention(std::string_view text);

inline constexpr unsigned kDefaultTruncation = 20;

/// First Laurent row L^(1)_n / (-1)^n under the convention.
Rational first_row_scale(RadiusKind kind, Convention convention);

/// p(x) = x - front/l + (1/l) sum_{m=1}^{M} L_0^(m+1) x^(m+1), l = first_row_scale.
/// Under Published, 1/l = 4/3 and front/l = 2/3, 4/3, 1/3, 2/3.
RationalPolynomial fixed_point_polynomial(RadiusKind kind, unsigned m, Convention convention = Convention::Published);
Rational fixed_point_residual(RadiusKind kind, const Rational& x, unsigned m,
                              Convention convention = Convention::Published);
/// Geometric estimate of the dropped terms m > M of the residual at x, from
/// the ratio of the last two retained terms. Throws NoConvergence if that
/// ratio is >= 1.
Rational fixed_point_tail(RadiusKind kind, const Rational& x, unsigned m, Convention convention = Convention::Published);

/// ( s_k^(-1/k), s_k / s_{k+1} ) for the nu -> infinity limit of the
/// Euler-Rayleigh bracket divided by nu, s_k the power sums of
/// sum (-1)^n P(n) x^n / (4^n n!). Lower end rounded down.
CertifiedInterval large_order_bracket(RadiusKind kind, unsigned k);

/// Interval searched for the leading constant: the closed-form brackets for
/// conv-g and uconv-g, (0, 2) for h-kinds under Published, and the tightest
/// k = 1..3 large-order bracket for h-kinds under Consistent.
CertifiedInterval leading_search_bracket(RadiusKind kind, Convention convention);

/// Root of the truncated fixed-point polynomial enclosed to width_goal.
/// Throws BracketInvalid when the residual does not change sign.
CertifiedInterval leading_constant(RadiusKind kind, unsigned m, const Rational& width_goal,
                                   Convention convention = Convention::Published);

struct EpsilonCoefficient {
  Rational value;
  Rational uncertainty;
};

/// eps_1..eps_N of the expansion leading + sum eps_n / nu^n.
std::vector<EpsilonCoefficient> epsilon_coeffs(RadiusKind kind, unsigned n, unsigned m,
                                               Convention convention = Convention::Published);

struct AsymptoticExpansion {
  RadiusKind kind;
  Convention convention;
  CertifiedInterval leading;
  Rational leading_tail;  // truncation estimate, added to the leading width when reported
  std::vector<EpsilonCoefficient> eps;
  unsigned truncation;
  Rational front_factor;

  Rational leading_value() const { return leading.midpoint(); }
  Rational leading_uncertainty() const { return leading.width() / 2 + leading_tail; }
};

AsymptoticExpansion asymptotic_expansion(RadiusKind kind, unsigned n, unsigned m = kDefaultTruncation,
                                         Convention convention = Convention::Published);

/// sqrt(nu (c + sum_{n < terms} eps_n / nu^n)) for g-kinds, nu (c + ...) for
/// h-kinds. Throws NegativeArgument when the bracketed sum is <= 0.
double asymptotic_radius(const AsymptoticExpansion& expansion, const Rational& nu, unsigned terms);
double asymptotic_radius(RadiusKind kind, const Rational& nu, unsigned terms, unsigned m = kDefaultTruncation,
                         Convention convention = Convention::Published);

}  // namespace besselrad
