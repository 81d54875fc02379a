#include "besselrad/potpoly.hpp"

#include "besselrad/error.hpp"

namespace besselrad {

namespace {

// C(alpha, l) * l! = alpha (alpha - 1) ... (alpha - l + 1).
Rational falling(const Rational& alpha, unsigned l) {
  Rational out(1);
  for (unsigned i = 0; i < l; ++i) out *= alpha - Rational(static_cast<long>(i));
  return out;
}

class PartitionSum {
 public:
  PartitionSum(const Rational& alpha, std::span<const Rational> a, unsigned n) : alpha_(alpha), a_(a), n_(n) {
    factorials_.push_back(Integer(1));
    for (unsigned i = 1; i <= n; ++i) factorials_.push_back(factorials_.back() * Integer(i));
    mult_.assign(n + 1, 0);
  }

  // Parts of size 1..n are chosen from the smallest upward, so each
  // multiplicity vector is visited once, in colexicographic order.
  Rational run() {
    total_ = Rational(0);
    visit(1, n_);
    return total_;
  }

 private:
  Rational a_at(unsigned j) const { return j <= a_.size() ? a_[j - 1] : Rational(0); }

  void visit(unsigned part, unsigned remaining) {
    if (remaining == 0) {
      accumulate();
      return;
    }
    if (part > remaining) return;
    for (unsigned l = 0; l * part <= remaining; ++l) {
      mult_[part] = l;
      visit(part + 1, remaining - l * part);
    }
    mult_[part] = 0;
  }

  void accumulate() {
    unsigned l_total = 0;
    Integer denom(1);
    Rational product(1);
    for (unsigned j = 1; j <= n_; ++j) {
      if (mult_[j] == 0) continue;
      const Rational aj = a_at(j);
      if (aj.is_zero()) return;
      l_total += mult_[j];
      denom *= factorials_[mult_[j]];
      product *= aj.pow(mult_[j]);
    }
    total_ += falling(alpha_, l_total) * Rational(Integer(1), denom) * product;
  }

  Rational alpha_;
  std::span<const Rational> a_;
  unsigned n_;
  std::vector<Integer> factorials_;
  std::vector<unsigned> mult_;
  Rational total_;
};

// xi_n: coefficients of the logarithmic-derivative numerator in t,
// xi_n = (n+1) c_{n+1}; kappa_n = c_n.
std::vector<Rational> derivative_coeffs(const std::vector<Rational>& c, std::size_t count) {
  std::vector<Rational> xi(count);
  for (std::size_t n = 0; n < count; ++n) xi[n] = Rational(static_cast<long>(n + 1)) * c[n + 1];
  return xi;
}

}  // namespace

Rational potential_poly(const Rational& alpha, std::span<const Rational> a, unsigned n) {
  if (n == 0) return Rational(1);
  return PartitionSum(alpha, a, n).run();
}

std::vector<Rational> potential_poly_sequence(const Rational& alpha, std::span<const Rational> a, unsigned n_max) {
  std::vector<Rational> out(n_max + 1);
  out[0] = Rational(1);
  for (unsigned n = 1; n <= n_max; ++n) {
    Rational s(0);
    for (unsigned k = 1; k <= n && k <= a.size(); ++k) {
      if (a[k - 1].is_zero()) continue;
      s += (alpha * Rational(k) - Rational(n - k)) * a[k - 1] * out[n - k];
    }
    out[n] = s / Rational(n);
  }
  return out;
}

std::vector<Rational> pi_coeffs(std::span<const Rational> kappa, unsigned m_max) {
  auto kappa_at = [&](unsigned j) { return j <= kappa.size() ? kappa[j - 1] : Rational(0); };
  std::vector<Rational> pi(m_max + 1);
  pi[0] = Rational(1);
  if (m_max == 0) return pi;

  const Rational k1 = kappa_at(1);
  if (k1.is_zero()) {
    for (unsigned m = 1; m <= m_max; ++m) {
      Rational s(0);
      for (unsigned j = 1; j <= m; ++j) s -= kappa_at(j) * pi[m - j];
      pi[m] = s;
    }
    return pi;
  }

  std::vector<Rational> f(m_max);
  for (unsigned n = 1; n <= m_max; ++n) f[n - 1] = kappa_at(n + 1) / k1;
  for (unsigned m = 1; m <= m_max; ++m) {
    Rational s(0);
    Rational k1_power(1);
    for (unsigned p = 1; p <= m; ++p) {
      k1_power *= -k1;
      s += k1_power * potential_poly(Rational(p), f, m - p);
    }
    pi[m] = s;
  }
  return pi;
}

PowerSums power_sums_via_potential(SeriesFamily family, const Order& nu, std::size_t k_max) {
  if (k_max == 0) throw Error(ErrorKind::InvalidArgument, "K must be positive");
  const auto c = series_coefficients(family, k_max, nu);
  // In z for squared families: d/dz log f(z^2) = 2z f'(t)/f(t), hence w = 2.
  const Rational w = variable_kind(family) == VariableKind::Squared ? Rational(2) : Rational(1);
  std::vector<Rational> xi = derivative_coeffs(c, k_max);
  for (auto& x : xi) x *= w;
  const std::vector<Rational> kappa(c.begin() + 1, c.end());
  const auto pi = pi_coeffs(kappa, static_cast<unsigned>(k_max - 1));

  std::vector<Rational> sums(k_max);
  for (std::size_t n = 0; n < k_max; ++n) {
    Rational s(0);
    for (std::size_t m = 0; m <= n; ++m) s += pi[m] * xi[n - m];
    sums[n] = -s / w;
  }
  return {family, nu.value(), std::move(sums)};
}

}  // namespace besselrad
