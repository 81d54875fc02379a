#include "besselrad/asympt.hpp"

#include <algorithm>
#include <string>

#include "besselrad/bisection.hpp"
#include "besselrad/error.hpp"
#include "besselrad/potpoly.hpp"

namespace besselrad {

namespace {

constexpr unsigned kLeadingBits = 200;
constexpr unsigned kEpsilonBits = 320;
constexpr unsigned kRootBits = 64;

// Rows 1..m+1 of the Laurent table to order n_max, with row 1 replaced
// according to the convention.
std::vector<std::vector<Rational>> master_rows(RadiusKind kind, unsigned m, unsigned n_max, Convention convention) {
  const LaurentTable table(traits(kind).target, m + 1, n_max);
  std::vector<std::vector<Rational>> rows(m + 1);
  for (unsigned k = 1; k <= m + 1; ++k) rows[k - 1] = table.row(k).coeffs;
  const Rational scale = first_row_scale(kind, convention);
  for (unsigned n = 0; n <= n_max; ++n) rows[0][n] = n % 2 == 0 ? scale : -scale;
  return rows;
}

Rational term_magnitude(const std::vector<std::vector<Rational>>& rows, const Rational& x, unsigned k) {
  return (x.pow(k) * rows[k - 1][0]).abs();
}

// eps_1..eps_n at a fixed leading constant c.
std::vector<Rational> solve_epsilons(const std::vector<std::vector<Rational>>& rows, const Rational& c, unsigned n) {
  const auto k_max = static_cast<unsigned>(rows.size());
  std::vector<Rational> c_pow(k_max + 1);
  c_pow[0] = Rational(1);
  for (unsigned k = 1; k <= k_max; ++k) c_pow[k] = c_pow[k - 1] * c;

  Rational slope(0);
  for (unsigned k = 1; k <= k_max; ++k) slope += Rational(k) * c_pow[k - 1] * rows[k - 1][0];
  if (slope.is_zero()) throw Error(ErrorKind::DivisionByZero, "degenerate linear solve for eps");

  std::vector<Rational> eps;
  std::vector<Rational> scaled;  // eps_j / c
  for (unsigned order = 1; order <= n; ++order) {
    std::vector<Rational> known = scaled;
    known.emplace_back(0);
    Rational rest(0);
    for (unsigned k = 1; k <= k_max; ++k) {
      const auto a = potential_poly_sequence(Rational(k), known, order);
      Rational inner(0);
      for (unsigned j = 0; j <= order; ++j) inner += a[j] * rows[k - 1][order - j];
      rest += c_pow[k] * inner;
    }
    const Rational value = (-rest / slope).round_dyadic(kEpsilonBits);
    eps.push_back(value);
    scaled.push_back(value / c);
  }
  return eps;
}

Rational convergence_ratio(const std::vector<std::vector<Rational>>& rows, const Rational& x) {
  const auto k_max = static_cast<unsigned>(rows.size());
  const Rational last = term_magnitude(rows, x, k_max);
  const Rational prev = term_magnitude(rows, x, k_max - 1);
  if (prev.is_zero()) return Rational(0);
  return last / prev;
}

Rational geometric_tail(const Rational& last, const Rational& ratio) {
  if (ratio >= Rational(1)) throw Error(ErrorKind::NoConvergence, "fixed-point series terms do not decrease");
  return last * ratio / (Rational(1) - ratio);
}

}  // namespace

std::string_view to_string(Convention convention) noexcept {
  return convention == Convention::Published ? "published" : "consistent";
}

Convention parse_convention(std::string_view text) {
  if (text == "published") return Convention::Published;
  if (text == "consistent") return Convention::Consistent;
  throw Error(ErrorKind::InvalidArgument,
              "unknown convention '" + std::string(text) + "' (expected published or consistent)");
}

Rational first_row_scale(RadiusKind kind, Convention convention) {
  if (convention == Convention::Published || traits(kind).target == RayleighTarget::Eta) return Rational(3, 4);
  return Rational(1, 2);
}

RationalPolynomial fixed_point_polynomial(RadiusKind kind, unsigned m, Convention convention) {
  if (m == 0) throw Error(ErrorKind::InvalidArgument, "truncation M must be positive");
  const auto rows = master_rows(kind, m, 0, convention);
  const Rational inv = first_row_scale(kind, convention).reciprocal();
  std::vector<Rational> coeffs(m + 2);
  coeffs[0] = -traits(kind).front * inv;
  coeffs[1] = Rational(1);
  for (unsigned k = 2; k <= m + 1; ++k) coeffs[k] = inv * rows[k - 1][0];
  return RationalPolynomial(std::move(coeffs));
}

Rational fixed_point_residual(RadiusKind kind, const Rational& x, unsigned m, Convention convention) {
  return fixed_point_polynomial(kind, m, convention)(x);
}

Rational fixed_point_tail(RadiusKind kind, const Rational& x, unsigned m, Convention convention) {
  if (m < 2) throw Error(ErrorKind::InvalidArgument, "tail estimate needs M >= 2");
  const auto rows = master_rows(kind, m, 0, convention);
  const Rational inv = first_row_scale(kind, convention).reciprocal();
  return geometric_tail(inv * term_magnitude(rows, x, m + 1), convergence_ratio(rows, x));
}

CertifiedInterval large_order_bracket(RadiusKind kind, unsigned k) {
  if (k == 0) throw Error(ErrorKind::InvalidArgument, "k must be positive");
  const SeriesFamily family = traits(kind).critical;
  std::vector<Rational> coeffs;
  Rational base(1);
  coeffs.push_back(base);
  for (unsigned n = 1; n <= k + 1; ++n) {
    base /= Rational(-4 * static_cast<long>(n));
    coeffs.push_back(base * Rational(numerator_rule(family, n)));
  }
  const auto s = newton_power_sums(coeffs, k + 1);
  return {kth_root(s[k - 1].reciprocal(), k, kRootBits).lo, s[k - 1] / s[k]};
}

CertifiedInterval leading_search_bracket(RadiusKind kind, Convention convention) {
  switch (kind) {
    case RadiusKind::ConvG: return {kth_root(Rational(2, 7), 2, kRootBits).lo, Rational(7, 13)};
    case RadiusKind::UConvG: return {Rational(4, 15), Rational(1, 3)};
    default: break;
  }
  if (convention == Convention::Published) return {Rational(0), Rational(2)};
  CertifiedInterval best = large_order_bracket(kind, 1);
  for (unsigned k = 2; k <= 3; ++k) {
    const CertifiedInterval b = large_order_bracket(kind, k);
    best = CertifiedInterval(max(best.lo(), b.lo()), min(best.hi(), b.hi()));
  }
  return best;
}

CertifiedInterval leading_constant(RadiusKind kind, unsigned m, const Rational& width_goal, Convention convention) {
  const RationalPolynomial p = fixed_point_polynomial(kind, m, convention);
  const SignOracle oracle = [&p](const Rational& x) {
    const int s = p(x).sign();
    return s > 0 ? Sign::Positive : (s < 0 ? Sign::Negative : Sign::Zero);
  };
  return bisect_smallest_root(oracle, leading_search_bracket(kind, convention), width_goal);
}

std::vector<EpsilonCoefficient> epsilon_coeffs(RadiusKind kind, unsigned n, unsigned m, Convention convention) {
  if (m < 3) throw Error(ErrorKind::InvalidArgument, "truncation M must be at least 3");
  if (n == 0) return {};
  const Rational goal = Rational::pow2(-static_cast<long>(kLeadingBits));

  const auto rows = master_rows(kind, m, n, convention);
  const CertifiedInterval c = leading_constant(kind, m, goal, convention);
  const auto mid = solve_epsilons(rows, c.midpoint(), n);
  const auto at_lo = solve_epsilons(rows, c.lo(), n);
  const auto at_hi = solve_epsilons(rows, c.hi(), n);

  const auto coarse_rows = master_rows(kind, m - 1, n, convention);
  const auto coarse = solve_epsilons(coarse_rows, leading_constant(kind, m - 1, goal, convention).midpoint(), n);
  const Rational ratio = convergence_ratio(rows, c.hi());
  if (ratio >= Rational(1)) throw Error(ErrorKind::NoConvergence, "fixed-point series terms do not decrease");
  const Rational amplify = ratio / (Rational(1) - ratio);

  std::vector<EpsilonCoefficient> out;
  out.reserve(n);
  for (unsigned i = 0; i < n; ++i) {
    const Rational spread = max((at_lo[i] - mid[i]).abs(), (at_hi[i] - mid[i]).abs());
    const Rational truncation = (mid[i] - coarse[i]).abs() * amplify;
    out.push_back({mid[i], (spread + truncation + Rational::pow2(-static_cast<long>(kEpsilonBits)))});
  }
  return out;
}

AsymptoticExpansion asymptotic_expansion(RadiusKind kind, unsigned n, unsigned m, Convention convention) {
  const Rational goal = Rational::pow2(-static_cast<long>(kLeadingBits));
  CertifiedInterval leading = leading_constant(kind, m, goal, convention);
  const Rational tail = fixed_point_tail(kind, leading.hi(), m, convention);
  return {kind,  convention, std::move(leading), tail, epsilon_coeffs(kind, n, m, convention),
          m,     traits(kind).front};
}

double asymptotic_radius(const AsymptoticExpansion& expansion, const Rational& nu, unsigned terms) {
  if (terms == 0) throw Error(ErrorKind::InvalidArgument, "at least one term is required");
  if (terms - 1 > expansion.eps.size()) {
    throw Error(ErrorKind::InvalidArgument, "expansion holds only " + std::to_string(expansion.eps.size() + 1) + " terms");
  }
  if (nu.sign() <= 0) throw Error(ErrorKind::NegativeArgument, "asymptotic radius needs nu > 0");
  Rational sum = expansion.leading_value();
  const Rational u = nu.reciprocal();
  Rational u_pow(1);
  for (unsigned i = 0; i + 1 < terms; ++i) {
    u_pow *= u;
    sum += expansion.eps[i].value * u_pow;
  }
  if (sum.sign() <= 0) {
    throw Error(ErrorKind::NegativeArgument, "truncated expansion is non-positive at nu = " + nu.str());
  }
  const Rational scaled = nu * sum;
  if (!traits(expansion.kind).squared) return scaled.to_double();
  const RootEnclosure root = kth_root(scaled, 2, 80);
  return ((root.lo + root.hi) / 2).to_double();
}

double asymptotic_radius(RadiusKind kind, const Rational& nu, unsigned terms, unsigned m, Convention convention) {
  if (terms == 0) throw Error(ErrorKind::InvalidArgument, "at least one term is required");
  return asymptotic_radius(asymptotic_expansion(kind, terms - 1, m, convention), nu, terms);
}

}  // namespace besselrad
