#include "besselrad/rayleigh.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "besselrad/error.hpp"

namespace besselrad {

namespace {

Integer factorial(unsigned n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

// T[j][m] = h_m(1..j).
std::vector<std::vector<Integer>> homogeneous_table(unsigned k_max, unsigned n_max) {
  std::vector<std::vector<Integer>> table(k_max + 1, std::vector<Integer>(n_max + 1, 0));
  for (unsigned j = 0; j <= k_max; ++j) table[j][0] = 1;
  for (unsigned j = 1; j <= k_max; ++j) {
    for (unsigned m = 1; m <= n_max; ++m) table[j][m] = table[j - 1][m] + Integer(j) * table[j][m - 1];
  }
  return table;
}

std::vector<Rational> laurent_row(Integer leading_numerator, unsigned k, unsigned n_max,
                                  const std::vector<std::vector<Integer>>& table) {
  Integer den = factorial(k);
  mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), 2 * k);
  const Rational lead(k % 2 == 0 ? leading_numerator : Integer(-leading_numerator), den);
  std::vector<Rational> out;
  out.reserve(n_max + 1);
  for (unsigned n = 0; n <= n_max; ++n) {
    const Rational term = lead * Rational(table[k][n]);
    out.push_back(n % 2 == 0 ? term : -term);
  }
  return out;
}

}  // namespace

std::vector<Rational> newton_power_sums(std::span<const Rational> coefficients, std::size_t k_max) {
  if (coefficients.size() < k_max + 1) {
    throw Error(ErrorKind::InvalidArgument, "newton_power_sums needs coefficients c_0..c_K");
  }
  std::vector<Rational> sums(k_max);
  for (std::size_t k = 1; k <= k_max; ++k) {
    Rational s = -Rational(static_cast<long>(k)) * coefficients[k];
    for (std::size_t i = 1; i < k; ++i) s -= coefficients[i] * sums[k - i - 1];
    sums[k - 1] = std::move(s);
  }
  return sums;
}

const Rational& PowerSums::at(std::size_t k) const {
  if (k == 0 || k > values.size()) {
    throw Error(ErrorKind::InvalidArgument, "power sum index " + std::to_string(k) + " out of range");
  }
  return values[k - 1];
}

PowerSums power_sums(SeriesFamily family, const Order& nu, std::size_t k_max) {
  if (k_max == 0) throw Error(ErrorKind::InvalidArgument, "K must be positive");
  const auto coeffs = series_coefficients(family, k_max, nu);
  return {family, nu.value(), newton_power_sums(coeffs, k_max)};
}

Integer complete_homogeneous(unsigned k, unsigned n) { return homogeneous_table(k, n)[k][n]; }

std::vector<Rational> laurent_a_coeffs(unsigned k, unsigned n_max) {
  if (k == 0) throw Error(ErrorKind::InvalidArgument, "k must be positive");
  return laurent_row(Integer(2 * k + 1), k, n_max, homogeneous_table(k, n_max));
}

std::vector<Rational> laurent_b_coeffs(unsigned k, unsigned n_max) {
  if (k == 0) throw Error(ErrorKind::InvalidArgument, "k must be positive");
  return laurent_row(Integer(k + 1), k, n_max, homogeneous_table(k, n_max));
}

std::string_view to_string(RayleighTarget target) noexcept {
  return target == RayleighTarget::Eta ? "eta" : "theta";
}

RayleighTarget parse_target(std::string_view text) {
  std::string key(text);
  std::transform(key.begin(), key.end(), key.begin(), [](unsigned char c) { return std::tolower(c); });
  if (key == "eta") return RayleighTarget::Eta;
  if (key == "theta") return RayleighTarget::Theta;
  throw Error(ErrorKind::InvalidArgument, "unknown target '" + std::string(text) + "' (expected eta or theta)");
}

Rational LaurentCoeffs::evaluate(const Rational& nu) const {
  if (nu.is_zero()) throw Error(ErrorKind::DivisionByZero, "Laurent expansion evaluated at nu = 0");
  const Rational u = nu.reciprocal();
  Rational acc(0);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * u + *it;
  return acc * u.pow(k);
}

LaurentTable::LaurentTable(RayleighTarget target, unsigned k_max, unsigned n_max)
    : target_(target), k_max_(k_max), n_max_(n_max) {
  if (k_max == 0) throw Error(ErrorKind::InvalidArgument, "k must be positive");
  const auto table = homogeneous_table(k_max, n_max);
  std::vector<std::vector<Rational>> a;
  a.reserve(k_max);
  for (unsigned k = 1; k <= k_max; ++k) {
    const Integer lead = target == RayleighTarget::Eta ? Integer(2 * k + 1) : Integer(k + 1);
    a.push_back(laurent_row(lead, k, n_max, table));
  }
  rows_.assign(k_max, std::vector<Rational>(n_max + 1));
  for (unsigned k = 1; k <= k_max; ++k) {
    for (unsigned n = 0; n <= n_max; ++n) {
      Rational s = -Rational(static_cast<long>(k)) * a[k - 1][n];
      for (unsigned m = 0; m <= n; ++m) {
        for (unsigned i = 1; i < k; ++i) s -= a[i - 1][m] * rows_[k - i - 1][n - m];
      }
      rows_[k - 1][n] = std::move(s);
    }
  }
}

const Rational& LaurentTable::at(unsigned k, unsigned n) const {
  if (k == 0 || k > k_max_ || n > n_max_) throw Error(ErrorKind::InvalidArgument, "Laurent index out of range");
  return rows_[k - 1][n];
}

LaurentCoeffs LaurentTable::row(unsigned k) const {
  if (k == 0 || k > k_max_) throw Error(ErrorKind::InvalidArgument, "Laurent index out of range");
  return {k, target_, rows_[k - 1]};
}

LaurentCoeffs laurent_eta(unsigned k, unsigned n_max) { return LaurentTable(RayleighTarget::Eta, k, n_max).row(k); }

LaurentCoeffs laurent_theta(unsigned k, unsigned n_max) {
  return LaurentTable(RayleighTarget::Theta, k, n_max).row(k);
}

}  // namespace besselrad
