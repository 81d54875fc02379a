#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "besselrad/bisection.hpp"
#include "besselrad/interval.hpp"
#include "besselrad/rational.hpp"

namespace besselrad {

enum class SeriesFamily { WeierstrassG, WeierstrassH, ConvexG, ConvexH, UConvexG, UConvexH };

inline constexpr std::array<SeriesFamily, 6> kAllFamilies = {
    SeriesFamily::WeierstrassG, SeriesFamily::WeierstrassH, SeriesFamily::ConvexG,
    SeriesFamily::ConvexH,      SeriesFamily::UConvexG,     SeriesFamily::UConvexH};

// Squared: the series is in t = z^2. Plain: t = z.
enum class VariableKind { Squared, Plain };

std::string_view to_string(SeriesFamily family) noexcept;
/// Accepts the enumerator names case-insensitively ("ConvexG", "convexg").
SeriesFamily parse_family(std::string_view text);
VariableKind variable_kind(SeriesFamily family) noexcept;
/// P(n) of the coefficient rule.
Integer numerator_rule(SeriesFamily family, unsigned long n);

/// Bessel order, restricted to nu > -1.
class Order {
 public:
  explicit Order(Rational nu);
  const Rational& value() const { return nu_; }

 private:
  Rational nu_;
};

/// (-1)^n P(n) / (4^n n! (nu+1)_n); 1 at n = 0.
Rational series_coefficient(SeriesFamily family, unsigned long n, const Order& nu);
/// Coefficients 0..n_max.
std::vector<Rational> series_coefficients(SeriesFamily family, unsigned long n_max, const Order& nu);

/// Bound on |sum_{n>N} c_n t^n| from the term-ratio majorant q(N). Throws
/// Error(RatioNotSmall) when q(N) > 1/2 and Error(NegativeArgument) for t < 0.
Rational tail_bound(SeriesFamily family, const Order& nu, const Rational& t, unsigned long n);

/// Incremental evaluation of one series at one point. Partial sums and the
/// Pochhammer-scaled base coefficient are carried forward between requests.
class SeriesEvaluator {
 public:
  SeriesEvaluator(SeriesFamily family, const Order& nu, Rational t);

  /// Enclosure of the series value with half-width at most abs_tol.
  CertifiedInterval enclose(const Rational& abs_tol);
  unsigned long terms() const { return n_; }

 private:
  void advance_to(unsigned long n);

  SeriesFamily family_;
  Rational nu_;
  Rational t_;
  unsigned long n_ = 0;
  Rational base_{1};     // (-1)^n / (4^n n! (nu+1)_n)
  Rational t_power_{1};  // t^n
  Rational partial_{1};
};

CertifiedInterval eval_certified(SeriesFamily family, const Order& nu, const Rational& t, const Rational& abs_tol);

inline constexpr unsigned kDefaultSignEffort = 160;

/// Certified sign of the series at t >= 0. The tolerance starts at 1e-4 and
/// halves on every attempt; Unknown after max_effort attempts.
Sign sign_at(SeriesFamily family, const Order& nu, const Rational& t, unsigned max_effort = kDefaultSignEffort);

struct ComplexRational {
  Rational re;
  Rational im;
};

struct ComplexRectangle {
  CertifiedInterval re;
  CertifiedInterval im;
};

enum class BesselMap { G, H };

std::string_view to_string(BesselMap map) noexcept;
BesselMap parse_map(std::string_view text);

/// Rectangle enclosing g_nu(z) or h_nu(z), each part to within abs_tol.
ComplexRectangle map_point(BesselMap map, const Order& nu, const ComplexRational& z, const Rational& abs_tol);

}  // namespace besselrad
