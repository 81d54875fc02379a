#include "besselrad/series.hpp"

#include <algorithm>
#include <cctype>

#include "besselrad/error.hpp"

namespace besselrad {

namespace {

std::string lower(std::string_view text) {
  std::string out(text);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
  return out;
}

// Ratio of consecutive term magnitudes from n to n+1 for the rule P, at t.
Rational term_ratio(SeriesFamily family, const Rational& nu, const Rational& t, unsigned long n) {
  const Rational p_ratio(numerator_rule(family, n + 1), numerator_rule(family, n));
  return t * p_ratio / (Rational(4) * Rational(static_cast<long>(n + 1)) * (nu + Rational(static_cast<long>(n + 1))));
}

Rational ratio_tail(const Rational& next_term_abs, const Rational& q) {
  if (q > Rational(1, 2)) throw Error(ErrorKind::RatioNotSmall, "term ratio " + q.str() + " exceeds 1/2");
  return next_term_abs / (Rational(1) - q);
}

const Rational& initial_sign_tolerance() {
  static const Rational tol = Rational::pow10(-4);
  return tol;
}

}  // namespace

std::string_view to_string(SeriesFamily family) noexcept {
  switch (family) {
    case SeriesFamily::WeierstrassG: return "WeierstrassG";
    case SeriesFamily::WeierstrassH: return "WeierstrassH";
    case SeriesFamily::ConvexG: return "ConvexG";
    case SeriesFamily::ConvexH: return "ConvexH";
    case SeriesFamily::UConvexG: return "UConvexG";
    case SeriesFamily::UConvexH: return "UConvexH";
  }
  return "?";
}

SeriesFamily parse_family(std::string_view text) {
  const std::string key = lower(text);
  for (SeriesFamily f : kAllFamilies) {
    if (lower(to_string(f)) == key) return f;
  }
  throw Error(ErrorKind::InvalidArgument, "unknown series family '" + std::string(text) + "'");
}

VariableKind variable_kind(SeriesFamily family) noexcept {
  switch (family) {
    case SeriesFamily::WeierstrassG:
    case SeriesFamily::ConvexG:
    case SeriesFamily::UConvexG: return VariableKind::Squared;
    default: return VariableKind::Plain;
  }
}

Integer numerator_rule(SeriesFamily family, unsigned long n) {
  const Integer m(n);
  switch (family) {
    case SeriesFamily::WeierstrassG: return 2 * m + 1;
    case SeriesFamily::WeierstrassH: return m + 1;
    case SeriesFamily::ConvexG: return (2 * m + 1) * (2 * m + 1);
    case SeriesFamily::ConvexH: return (m + 1) * (m + 1);
    case SeriesFamily::UConvexG: return (2 * m + 1) * (4 * m + 1);
    case SeriesFamily::UConvexH: return (m + 1) * (2 * m + 1);
  }
  return 1;
}

Order::Order(Rational nu) : nu_(std::move(nu)) {
  if (nu_ <= Rational(-1)) throw Error(ErrorKind::OrderOutOfRange, "order nu = " + nu_.str() + " must exceed -1");
}

std::vector<Rational> series_coefficients(SeriesFamily family, unsigned long n_max, const Order& nu) {
  std::vector<Rational> out;
  out.reserve(n_max + 1);
  Rational base(1);
  out.push_back(base);
  for (unsigned long n = 1; n <= n_max; ++n) {
    base /= -(Rational(4) * Rational(static_cast<long>(n)) * (nu.value() + Rational(static_cast<long>(n))));
    out.push_back(base * Rational(numerator_rule(family, n)));
  }
  return out;
}

Rational series_coefficient(SeriesFamily family, unsigned long n, const Order& nu) {
  return series_coefficients(family, n, nu).back();
}

Rational tail_bound(SeriesFamily family, const Order& nu, const Rational& t, unsigned long n) {
  if (t.sign() < 0) throw Error(ErrorKind::NegativeArgument, "series argument must be non-negative");
  if (t.is_zero()) return Rational(0);
  const Rational q = term_ratio(family, nu.value(), t, n);
  if (q > Rational(1, 2)) throw Error(ErrorKind::RatioNotSmall, "term ratio " + q.str() + " exceeds 1/2");
  const Rational next = series_coefficient(family, n + 1, nu).abs() * t.pow(static_cast<long>(n + 1));
  return ratio_tail(next, q);
}

SeriesEvaluator::SeriesEvaluator(SeriesFamily family, const Order& nu, Rational t)
    : family_(family), nu_(nu.value()), t_(std::move(t)) {
  if (t_.sign() < 0) throw Error(ErrorKind::NegativeArgument, "series argument must be non-negative");
}

void SeriesEvaluator::advance_to(unsigned long n) {
  while (n_ < n) {
    ++n_;
    base_ /= -(Rational(4) * Rational(static_cast<long>(n_)) * (nu_ + Rational(static_cast<long>(n_))));
    t_power_ *= t_;
    partial_ += base_ * Rational(numerator_rule(family_, n_)) * t_power_;
  }
}

CertifiedInterval SeriesEvaluator::enclose(const Rational& abs_tol) {
  if (abs_tol.sign() <= 0) throw Error(ErrorKind::InvalidArgument, "tolerance must be positive");
  if (t_.is_zero()) return CertifiedInterval::point(Rational(1));
  unsigned long n = std::max<unsigned long>(n_, 1);
  for (;;) {
    advance_to(n);
    const Rational q = term_ratio(family_, nu_, t_, n_);
    if (q <= Rational(1, 2)) {
      const Rational next_base =
          base_ / (Rational(4) * Rational(static_cast<long>(n_ + 1)) * (nu_ + Rational(static_cast<long>(n_ + 1))));
      const Rational bound =
          ratio_tail(next_base.abs() * Rational(numerator_rule(family_, n_ + 1)) * t_power_ * t_, q);
      if (bound <= abs_tol) return {partial_ - bound, partial_ + bound};
    }
    n = 2 * n_;
  }
}

CertifiedInterval eval_certified(SeriesFamily family, const Order& nu, const Rational& t, const Rational& abs_tol) {
  SeriesEvaluator session(family, nu, t);
  return session.enclose(abs_tol);
}

Sign sign_at(SeriesFamily family, const Order& nu, const Rational& t, unsigned max_effort) {
  SeriesEvaluator session(family, nu, t);
  Rational tol = initial_sign_tolerance();
  for (unsigned attempt = 0; attempt < max_effort; ++attempt, tol /= 2) {
    const CertifiedInterval iv = session.enclose(tol);
    if (iv.lo().sign() > 0) return Sign::Positive;
    if (iv.hi().sign() < 0) return Sign::Negative;
    if (iv.lo().is_zero() && iv.hi().is_zero()) return Sign::Zero;
  }
  return Sign::Unknown;
}

std::string_view to_string(BesselMap map) noexcept { return map == BesselMap::G ? "g" : "h"; }

BesselMap parse_map(std::string_view text) {
  const std::string key = lower(text);
  if (key == "g") return BesselMap::G;
  if (key == "h") return BesselMap::H;
  throw Error(ErrorKind::InvalidArgument, "unknown map '" + std::string(text) + "' (expected g or h)");
}

ComplexRectangle map_point(BesselMap map, const Order& nu, const ComplexRational& z, const Rational& abs_tol) {
  if (abs_tol.sign() <= 0) throw Error(ErrorKind::InvalidArgument, "tolerance must be positive");
  if (z.re.is_zero() && z.im.is_zero()) {
    return {CertifiedInterval::point(Rational(0)), CertifiedInterval::point(Rational(0))};
  }
  // g(z) = z * S(z^2), h(z) = z * S(z), S(w) = sum (-1)^n w^n / (4^n n! (nu+1)_n).
  const Rational modulus_sq = z.re * z.re + z.im * z.im;
  const Rational z_bound = kth_root(modulus_sq, 2, 64).hi;
  const Rational w_re = map == BesselMap::G ? z.re * z.re - z.im * z.im : z.re;
  const Rational w_im = map == BesselMap::G ? Rational(2) * z.re * z.im : z.im;
  const Rational w_bound = map == BesselMap::G ? modulus_sq : z_bound;
  const Rational& v = nu.value();

  Rational sum_re(1), sum_im(0), pow_re(1), pow_im(0), base(1);
  for (unsigned long n = 1;; ++n) {
    base /= -(Rational(4) * Rational(static_cast<long>(n)) * (v + Rational(static_cast<long>(n))));
    const Rational next_re = pow_re * w_re - pow_im * w_im;
    pow_im = pow_re * w_im + pow_im * w_re;
    pow_re = next_re;
    sum_re += base * pow_re;
    sum_im += base * pow_im;

    const Rational q = w_bound / (Rational(4) * Rational(static_cast<long>(n + 1)) * (v + Rational(static_cast<long>(n + 1))));
    if (q > Rational(1, 2)) continue;
    const Rational next_abs =
        base.abs() * w_bound.pow(static_cast<long>(n + 1)) /
        (Rational(4) * Rational(static_cast<long>(n + 1)) * (v + Rational(static_cast<long>(n + 1))));
    const Rational bound = z_bound * next_abs / (Rational(1) - q);
    if (bound > abs_tol) continue;
    const Rational re = z.re * sum_re - z.im * sum_im;
    const Rational im = z.re * sum_im + z.im * sum_re;
    return {CertifiedInterval(re - bound, re + bound), CertifiedInterval(im - bound, im + bound)};
  }
}

}  // namespace besselrad
