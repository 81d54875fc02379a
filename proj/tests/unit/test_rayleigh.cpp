#include <doctest.h>

#include <functional>

#include "besselrad/error.hpp"
#include "besselrad/rayleigh.hpp"
#include "oracles.hpp"

using namespace besselrad;

namespace {

Rational from_mpq(const mpq_class& q) { return Rational(Integer(q.get_num()), Integer(q.get_den())); }

Integer factorial(unsigned n) {
  Integer f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

// sum over 0 <= k_1 <= k_2 <= ... <= k_{k-1} <= n of
// (-1)^{k_1} (-2)^{k_2 - k_1} ... (-k)^{n - k_{k-1}}.
Rational nested_sum(unsigned k, unsigned n) {
  std::function<Rational(unsigned, unsigned)> go = [&](unsigned level, unsigned prev) -> Rational {
    // level j chooses k_j in [prev, upper], factor (-j)^{k_j - prev}
    if (level == k) return Rational(-static_cast<long>(k)).pow(static_cast<long>(n - prev));
    Rational s(0);
    for (unsigned kj = prev; kj <= n; ++kj) {
      s += Rational(-static_cast<long>(level)).pow(static_cast<long>(kj - prev)) * go(level + 1, kj);
    }
    return s;
  };
  return go(1, 0);
}

Rational leading(long factor, unsigned k) {
  const Rational v(Integer(factor), factorial(k) * Integer(Rational::pow2(2 * static_cast<long>(k)).numerator()));
  return k % 2 == 0 ? v : -v;
}

}  // namespace

TEST_CASE("Newton identity agrees with explicit symmetric-function formulas") {
  for (SeriesFamily f : kAllFamilies) {
    for (const char* nu_text : {"0", "1/2", "7/3"}) {
      const Order nu(Rational::parse(nu_text));
      const auto c = series_coefficients(f, 3, nu);
      std::vector<mpq_class> q;
      for (const auto& x : c) q.push_back(x.raw());
      const PowerSums s = power_sums(f, nu, 3);
      CHECK(s.at(1).raw() == oracle::power_sum_1(q));
      CHECK(s.at(2).raw() == oracle::power_sum_2(q));
      CHECK(s.at(3).raw() == oracle::power_sum_3(q));
    }
  }
  CHECK_THROWS_AS(power_sums(SeriesFamily::ConvexG, Order(Rational(1)), 0), Error);
  CHECK_THROWS_AS(power_sums(SeriesFamily::ConvexG, Order(Rational(1)), 2).at(3), Error);
}

TEST_CASE("power_sums examples") {
  for (const char* nu_text : {"0", "1/2", "1", "7/3", "10", "-1/2"}) {
    const Rational nu = Rational::parse(nu_text);
    const Order order(nu);
    const Rational one(1);
    CHECK(power_sums(SeriesFamily::WeierstrassG, order, 1).at(1) == Rational(3) / (Rational(4) * (nu + one)));
    CHECK(power_sums(SeriesFamily::UConvexG, order, 1).at(1) == Rational(15) / (Rational(4) * (nu + one)));
    CHECK(power_sums(SeriesFamily::ConvexG, order, 2).at(2) ==
          (Rational(56) * nu + Rational(137)) / (Rational(16) * (nu + one) * (nu + one) * (nu + Rational(2))));
    CHECK(power_sums(SeriesFamily::WeierstrassH, order, 1).at(1) == one / (Rational(2) * (nu + one)));
  }
}

TEST_CASE("power sums are positive") {
  for (SeriesFamily f : kAllFamilies) {
    for (const char* nu_text : {"-9/10", "0", "1/2", "5", "50"}) {
      const PowerSums s = power_sums(f, Order(Rational::parse(nu_text)), 10);
      for (std::size_t k = 1; k <= 10; ++k) CHECK(s.at(k).sign() > 0);
    }
  }
}

TEST_CASE("laurent_a_coeffs and laurent_b_coeffs examples") {
  CHECK(laurent_a_coeffs(1, 0)[0] == Rational(-3, 4));
  const auto a1 = laurent_a_coeffs(1, 10);
  for (unsigned n = 0; n <= 10; ++n) CHECK(a1[n] == Rational(-3, 4) * Rational(n % 2 ? -1 : 1));
  const auto a2 = laurent_a_coeffs(2, 1);
  CHECK(a2[0] == Rational(5, 32));
  CHECK(a2[1] == Rational(-15, 32));
  CHECK(laurent_b_coeffs(1, 0)[0] == Rational(-1, 2));
  const auto b1 = laurent_b_coeffs(1, 10);
  for (unsigned n = 0; n <= 10; ++n) CHECK(b1[n] == Rational(-1, 2) * Rational(n % 2 ? -1 : 1));
  CHECK(laurent_b_coeffs(2, 0)[0] == Rational(3, 32));
  CHECK(complete_homogeneous(3, 2) == 25);
}

TEST_CASE("closed form equals the nested multi-sum for k, n <= 5") {
  for (unsigned k = 1; k <= 5; ++k) {
    const auto a = laurent_a_coeffs(k, 5);
    const auto b = laurent_b_coeffs(k, 5);
    for (unsigned n = 0; n <= 5; ++n) {
      const Rational s = nested_sum(k, n);
      CHECK(a[n] == leading(2 * k + 1, k) * s);
      CHECK(b[n] == leading(k + 1, k) * s);
    }
  }
}

TEST_CASE("a-coefficients reproduce the expansion of the series coefficient") {
  // a_k(nu) = (-1)^k (2k+1) / (4^k k! (nu+1)_k) = sum_n a_n^(k) / nu^(k+n); at
  // nu = 10^6 the truncation error is O(nu^-(k+N+1)).
  const Rational nu = Rational::pow10(6);
  for (unsigned k = 1; k <= 4; ++k) {
    const auto a = laurent_a_coeffs(k, 6);
    Rational series(0);
    for (unsigned n = 0; n <= 6; ++n) series += a[n] / nu.pow(static_cast<long>(k + n));
    const Rational exact = series_coefficient(SeriesFamily::WeierstrassG, k, Order(nu));
    CHECK((series - exact).abs() <= nu.pow(-static_cast<long>(k + 7)) * Rational(1000000));
  }
}

TEST_CASE("laurent_eta and laurent_theta examples") {
  const auto eta1 = laurent_eta(1, 8);
  const auto theta1 = laurent_theta(1, 8);
  CHECK(eta1.k == 1);
  CHECK(eta1.target == RayleighTarget::Eta);
  for (unsigned n = 0; n <= 8; ++n) {
    // Geometric expansion of 3/(4(nu+1)) and 1/(2(nu+1)) in 1/nu.
    const Rational sign(n % 2 ? -1 : 1);
    CHECK(eta1.coeffs[n] == Rational(3, 4) * sign);
    CHECK(theta1.coeffs[n] == Rational(1, 2) * sign);
  }
  // nu^2 S_2 -> eta_0^(2) with S_2 = c_1^2 - 2 c_2 built from oracle coefficients.
  const mpq_class big("100000000");
  std::vector<mpq_class> cg, ch;
  for (long n = 0; n <= 2; ++n) {
    cg.push_back(oracle::coefficient(oracle::Rule::WeierstrassG, n, big));
    ch.push_back(oracle::coefficient(oracle::Rule::WeierstrassH, n, big));
  }
  const Rational eta02 = laurent_eta(2, 0).coeffs[0];
  const Rational theta02 = laurent_theta(2, 0).coeffs[0];
  CHECK(eta02 == Rational(1, 4));
  CHECK(theta02 == Rational(1, 16));
  const mpq_class scaled_g = oracle::power_sum_2(cg) * big * big;
  const mpq_class scaled_h = oracle::power_sum_2(ch) * big * big;
  CHECK((from_mpq(scaled_g) - eta02).abs() < Rational(1, 1000000));
  CHECK((from_mpq(scaled_h) - theta02).abs() < Rational(1, 1000000));
  CHECK(laurent_eta(2, 1).coeffs[1] == Rational(-3, 16));
}

TEST_CASE("laurent table rows match individual calls") {
  const LaurentTable table(RayleighTarget::Theta, 6, 3);
  for (unsigned k = 1; k <= 6; ++k) CHECK(table.row(k).coeffs == laurent_theta(k, 3).coeffs);
  CHECK_THROWS_AS(table.at(7, 0), Error);
  CHECK(parse_target("eta") == RayleighTarget::Eta);
  CHECK_THROWS_AS(parse_target("zeta"), Error);
}

TEST_CASE("Laurent consistency: error shrinks by the expected power of two") {
  for (RayleighTarget target : {RayleighTarget::Eta, RayleighTarget::Theta}) {
    const SeriesFamily family = target == RayleighTarget::Eta ? SeriesFamily::WeierstrassG : SeriesFamily::WeierstrassH;
    const LaurentTable table(target, 3, 4);
    for (unsigned k = 1; k <= 3; ++k) {
      const LaurentCoeffs row = table.row(k);
      const Rational e100 = (power_sums(family, Order(Rational(100)), k).at(k) - row.evaluate(Rational(100))).abs();
      const Rational e200 = (power_sums(family, Order(Rational(200)), k).at(k) - row.evaluate(Rational(200))).abs();
      CHECK(e200.sign() > 0);
      CHECK(e100 / e200 >= Rational(9, 10) * Rational::pow2(k + 4));
      // C fitted at nu = 100 bounds the error at 200 with 10% slack.
      const Rational c = e100 * Rational(100).pow(static_cast<long>(k + 5));
      CHECK(e200 <= Rational(11, 10) * c / Rational(200).pow(static_cast<long>(k + 5)));
    }
  }
}
