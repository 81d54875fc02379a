#include <doctest.h>

#include <vector>

#include "besselrad/error.hpp"
#include "besselrad/series.hpp"
#include "oracles.hpp"

using namespace besselrad;

namespace {

Rational from_mpq(const mpq_class& q) { return Rational(Integer(q.get_num()), Integer(q.get_den())); }
mpq_class to_mpq(const Rational& r) { return r.raw(); }

oracle::Rule rule_of(SeriesFamily f) {
  switch (f) {
    case SeriesFamily::WeierstrassG: return oracle::Rule::WeierstrassG;
    case SeriesFamily::WeierstrassH: return oracle::Rule::WeierstrassH;
    case SeriesFamily::ConvexG: return oracle::Rule::ConvexG;
    case SeriesFamily::ConvexH: return oracle::Rule::ConvexH;
    case SeriesFamily::UConvexG: return oracle::Rule::UConvexG;
    case SeriesFamily::UConvexH: return oracle::Rule::UConvexH;
  }
  return oracle::Rule::One;
}

// Coefficients of g (in z, index = power) and h, then differentiated
// term by term: b_n = (-1)^n / (4^n n! (nu+1)_n).
std::vector<mpq_class> g_poly(const mpq_class& nu, int n_max) {
  std::vector<mpq_class> p(2 * n_max + 2, 0);
  for (int n = 0; n <= n_max; ++n) p[2 * n + 1] = oracle::coefficient(oracle::Rule::One, n, nu);
  return p;
}
std::vector<mpq_class> h_poly(const mpq_class& nu, int n_max) {
  std::vector<mpq_class> p(n_max + 2, 0);
  for (int n = 0; n <= n_max; ++n) p[n + 1] = oracle::coefficient(oracle::Rule::One, n, nu);
  return p;
}
std::vector<mpq_class> deriv(const std::vector<mpq_class>& p) {
  std::vector<mpq_class> d(p.size() > 1 ? p.size() - 1 : 1, 0);
  for (std::size_t i = 1; i < p.size(); ++i) d[i - 1] = p[i] * static_cast<long>(i);
  return d;
}
std::vector<mpq_class> times_z(const std::vector<mpq_class>& p, long factor) {
  std::vector<mpq_class> out(p.size() + 1, 0);
  for (std::size_t i = 0; i < p.size(); ++i) out[i + 1] = p[i] * factor;
  return out;
}
std::vector<mpq_class> add(std::vector<mpq_class> a, const std::vector<mpq_class>& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  return a;
}

}  // namespace

TEST_CASE("family metadata") {
  CHECK(variable_kind(SeriesFamily::ConvexG) == VariableKind::Squared);
  CHECK(variable_kind(SeriesFamily::UConvexG) == VariableKind::Squared);
  CHECK(variable_kind(SeriesFamily::WeierstrassG) == VariableKind::Squared);
  CHECK(variable_kind(SeriesFamily::ConvexH) == VariableKind::Plain);
  CHECK(variable_kind(SeriesFamily::UConvexH) == VariableKind::Plain);
  CHECK(variable_kind(SeriesFamily::WeierstrassH) == VariableKind::Plain);
  for (SeriesFamily f : kAllFamilies) CHECK(parse_family(to_string(f)) == f);
  CHECK(parse_family("convexh") == SeriesFamily::ConvexH);
  CHECK_THROWS_AS(parse_family("Gamma"), Error);
}

TEST_CASE("numerator rule ratio P(n+1)/P(n) is decreasing") {
  for (SeriesFamily f : kAllFamilies) {
    for (unsigned long n = 0; n < 500; ++n) {
      const Rational r0(numerator_rule(f, n + 1), numerator_rule(f, n));
      const Rational r1(numerator_rule(f, n + 2), numerator_rule(f, n + 1));
      CHECK(r1 <= r0);
    }
  }
}

TEST_CASE("order must exceed -1") {
  CHECK_THROWS_AS(Order(Rational(-1)), Error);
  try {
    (void)Order(Rational(-3, 2));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::OrderOutOfRange);
  }
  CHECK_NOTHROW(Order(Rational(-9, 10)));
}

TEST_CASE("series_coefficient examples") {
  CHECK(series_coefficient(SeriesFamily::ConvexG, 0, Order(Rational(7, 3))) == Rational(1));
  CHECK(series_coefficient(SeriesFamily::ConvexG, 1, Order(Rational(1))) == Rational(-9, 8));
  CHECK(series_coefficient(SeriesFamily::UConvexH, 1, Order(Rational(0))) == Rational(-3, 2));
  for (long nu : {0L, 1L, 5L}) {
    CHECK(series_coefficient(SeriesFamily::WeierstrassG, 1, Order(Rational(nu))) == Rational(-3, 4 * (nu + 1)));
    CHECK(series_coefficient(SeriesFamily::ConvexG, 1, Order(Rational(nu))) == Rational(-9, 4 * (nu + 1)));
  }
}

TEST_CASE("coefficients agree with the closed-form oracle") {
  for (SeriesFamily f : kAllFamilies) {
    for (const char* nu_text : {"0", "1/2", "-9/10", "7/3", "50"}) {
      const Rational nu = Rational::parse(nu_text);
      const auto c = series_coefficients(f, 25, Order(nu));
      for (long n = 0; n <= 25; ++n) CHECK(to_mpq(c[n]) == oracle::coefficient(rule_of(f), n, to_mpq(nu)));
    }
  }
}

TEST_CASE("derivative consistency with term-by-term differentiation") {
  for (const char* nu_text : {"0", "1/2", "1", "7/3", "10"}) {
    const Rational nu = Rational::parse(nu_text);
    const mpq_class q = to_mpq(nu);
    const int n_max = 30;
    const auto g = g_poly(q, n_max);
    const auto h = h_poly(q, n_max);
    const auto g1 = deriv(g);
    const auto g2 = deriv(g1);
    const auto conv_g = deriv(times_z(g1, 1));     // (z g')'
    const auto uconv_g = add(g1, times_z(g2, 2));  // g' + 2 z g''
    const auto h1 = deriv(h);
    const auto h2 = deriv(h1);
    const auto conv_h = add(h1, times_z(h2, 1));   // h' + z h''
    const auto uconv_h = add(h1, times_z(h2, 2));  // h' + 2 z h''
    const Order order(nu);
    for (unsigned long n = 0; n <= 30; ++n) {
      CHECK(to_mpq(series_coefficient(SeriesFamily::ConvexG, n, order)) == conv_g[2 * n]);
      CHECK(to_mpq(series_coefficient(SeriesFamily::UConvexG, n, order)) == uconv_g[2 * n]);
      if (n < 30) {
        CHECK(to_mpq(series_coefficient(SeriesFamily::ConvexH, n, order)) == conv_h[n]);
        CHECK(to_mpq(series_coefficient(SeriesFamily::UConvexH, n, order)) == uconv_h[n]);
      }
    }
  }
}

TEST_CASE("tail_bound") {
  const Order nu50(Rational(50));
  CHECK(tail_bound(SeriesFamily::ConvexG, nu50, Rational(0), 3) == Rational(0));

  const Rational b = tail_bound(SeriesFamily::ConvexG, nu50, Rational(27), 20);
  CHECK(b.sign() > 0);
  CHECK(b < Rational::pow10(-6));
  // True tail from a 200-term direct sum.
  const mpq_class full = oracle::direct_sum(oracle::Rule::ConvexG, 50, 27, 200);
  const mpq_class head = oracle::direct_sum(oracle::Rule::ConvexG, 50, 27, 21);
  mpq_class tail = full - head;
  CHECK(from_mpq(abs(tail)) <= b);

  try {
    tail_bound(SeriesFamily::ConvexG, Order(Rational(0)), Rational(100), 1);
    FAIL("expected RatioNotSmall");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::RatioNotSmall);
  }
}

TEST_CASE("eval_certified") {
  const CertifiedInterval zero = eval_certified(SeriesFamily::ConvexG, Order(Rational(3)), Rational(0), Rational(1, 10));
  CHECK(zero.lo() == Rational(1));
  CHECK(zero.hi() == Rational(1));

  // 1/S_1 = 8/9 is below the first zero of ConvexG at nu = 1.
  const CertifiedInterval below =
      eval_certified(SeriesFamily::ConvexG, Order(Rational(1)), Rational(8, 9), Rational::pow10(-6));
  CHECK(below.lo().sign() > 0);

  const Rational tol = Rational::pow10(-30);
  for (SeriesFamily f : kAllFamilies) {
    const CertifiedInterval iv = eval_certified(f, Order(Rational(0)), Rational(1), tol);
    CHECK(iv.width() <= Rational(2) * tol);
    const mpq_class direct = oracle::direct_sum(rule_of(f), 0, 1, 200);
    CHECK((iv.midpoint() - from_mpq(direct)).abs() <= tol);
    CHECK(iv.contains(from_mpq(direct)));
  }
}

TEST_CASE("eval_certified tightens monotonically") {
  const Order nu(Rational(5, 2));
  const Rational t(31, 7);
  Rational tol(1, 100);
  CertifiedInterval prev = eval_certified(SeriesFamily::UConvexH, nu, t, tol);
  const mpq_class truth = oracle::direct_sum(oracle::Rule::UConvexH, mpq_class(5, 2), mpq_class(31, 7), 200);
  for (int i = 0; i < 40; ++i) {
    tol /= 2;
    const CertifiedInterval next = eval_certified(SeriesFamily::UConvexH, nu, t, tol);
    CHECK(next.contains(from_mpq(truth)));
    CHECK(prev.contains(from_mpq(truth)));
    CHECK(next.width() <= prev.width());
    prev = next;
  }
}

TEST_CASE("sign_at") {
  const Order one(Rational(1));
  CHECK(sign_at(SeriesFamily::ConvexG, one, Rational(0)) == Sign::Positive);
  // The k = 1 upper bracket S_1/S_2 lies beyond the first zero.
  const auto c = series_coefficients(SeriesFamily::ConvexG, 2, one);
  const Rational s1 = -c[1];
  const Rational s2 = c[1] * c[1] - Rational(2) * c[2];
  CHECK(sign_at(SeriesFamily::ConvexG, one, s1 / s2) == Sign::Negative);
  // (z g_1')' = 2 (1/z - z) J_1(z) vanishes at z = 1 exactly.
  CHECK(sign_at(SeriesFamily::ConvexG, one, Rational(1), 4) == Sign::Unknown);
  CHECK(sign_at(SeriesFamily::ConvexG, one, Rational(1)) == Sign::Unknown);
}

TEST_CASE("sign_at is positive below the first zero") {
  for (SeriesFamily f : kAllFamilies) {
    for (long nu : {0L, 1L, 10L}) {
      const Order order{Rational(nu)};
      const auto c = series_coefficients(f, 1, order);
      const Rational lower = (-c[1]).reciprocal();  // S_1^{-1} < first zero
      for (int i = 0; i <= 8; ++i) {
        CHECK(sign_at(f, order, lower * Rational(i, 8)) == Sign::Positive);
      }
    }
  }
}

TEST_CASE("map_point") {
  const Rational tol = Rational::pow10(-20);
  const ComplexRectangle zero = map_point(BesselMap::G, Order(Rational(2)), {Rational(0), Rational(0)}, tol);
  CHECK(zero.re.lo() == Rational(0));
  CHECK(zero.re.hi() == Rational(0));
  CHECK(zero.im.hi() == Rational(0));

  // Real argument: z times the P = 1 series, against a 100-term direct sum.
  for (const char* z_text : {"1/10", "1/2", "3/2"}) {
    const Rational z = Rational::parse(z_text);
    const ComplexRectangle w = map_point(BesselMap::G, Order(Rational(3)), {z, Rational(0)}, tol);
    const mpq_class zq = to_mpq(z);
    const mpq_class direct = zq * oracle::direct_sum(oracle::Rule::One, 3, zq * zq, 100);
    CHECK(w.re.contains(from_mpq(direct)));
    CHECK(w.re.width() <= Rational(2) * tol);
    CHECK(w.im.contains(Rational(0)));
  }

  // h at r = 59.437, nu = 50 is finite and bounded by sum |c_n| r^(n+1).
  const Rational r = Rational::parse("59.437");
  const ComplexRectangle w = map_point(BesselMap::H, Order(Rational(50)), {r, Rational(0)}, Rational::pow10(-8));
  mpq_class majorant = 0;
  mpq_class power = to_mpq(r);
  for (long n = 0; n < 200; ++n) {
    majorant += abs(oracle::coefficient(oracle::Rule::One, n, 50)) * power;
    power *= to_mpq(r);
  }
  CHECK(w.re.midpoint().abs() <= from_mpq(majorant));
  CHECK(w.re.midpoint().sign() > 0);

  // Complex point against a long double series.
  const ComplexRational z{Rational(3, 2), Rational(-7, 4)};
  for (BesselMap m : {BesselMap::G, BesselMap::H}) {
    const ComplexRectangle v = map_point(m, Order(Rational(1, 2)), z, Rational::pow10(-12));
    const auto ref = oracle::bessel_map_ld(m == BesselMap::G, 0.5L, {1.5L, -1.75L});
    CHECK(v.re.midpoint().to_double() == doctest::Approx(static_cast<double>(ref.real())).epsilon(1e-12));
    CHECK(v.im.midpoint().to_double() == doctest::Approx(static_cast<double>(ref.imag())).epsilon(1e-12));
  }
  CHECK_THROWS_AS(map_point(BesselMap::G, Order(Rational(1)), z, Rational(0)), Error);
  CHECK(parse_map("h") == BesselMap::H);
}
