#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "besselrad/series.hpp"

namespace besselrad {

/// S_1..S_K from series coefficients c_0 = 1, c_1, ..., c_K by
/// S_k = -k c_k - sum_{i=1}^{k-1} c_i S_{k-i}.
std::vector<Rational> newton_power_sums(std::span<const Rational> coefficients, std::size_t k_max);

struct PowerSums {
  SeriesFamily family;
  Rational nu;
  std::vector<Rational> values;  // values[0] = S_1

  /// 1-based access, S_k.
  const Rational& at(std::size_t k) const;
  std::size_t size() const { return values.size(); }
};

PowerSums power_sums(SeriesFamily family, const Order& nu, std::size_t k_max);

/// a_0^(k)..a_N^(k): (-1)^k (2k+1) / (4^k k!) * (-1)^n h_n(1, ..., k).
std::vector<Rational> laurent_a_coeffs(unsigned k, unsigned n_max);
/// b_0^(k)..b_N^(k): as laurent_a_coeffs with (k+1) in place of (2k+1).
std::vector<Rational> laurent_b_coeffs(unsigned k, unsigned n_max);

/// Complete homogeneous symmetric polynomial h_n(1, 2, ..., k).
Integer complete_homogeneous(unsigned k, unsigned n);

enum class RayleighTarget { Eta, Theta };

std::string_view to_string(RayleighTarget target) noexcept;
RayleighTarget parse_target(std::string_view text);

/// Truncated expansion sum_n coeffs[n] / nu^(k+n).
struct LaurentCoeffs {
  unsigned k = 1;
  RayleighTarget target = RayleighTarget::Eta;
  std::vector<Rational> coeffs;

  Rational evaluate(const Rational& nu) const;
};

LaurentCoeffs laurent_eta(unsigned k, unsigned n_max);
LaurentCoeffs laurent_theta(unsigned k, unsigned n_max);

/// All rows k = 1..k_max of the eta or theta expansion, each to order n_max.
/// Rows share one recurrence pass.
class LaurentTable {
 public:
  LaurentTable(RayleighTarget target, unsigned k_max, unsigned n_max);

  RayleighTarget target() const { return target_; }
  unsigned k_max() const { return k_max_; }
  unsigned n_max() const { return n_max_; }
  /// L_n^(k), 1 <= k <= k_max, 0 <= n <= n_max.
  const Rational& at(unsigned k, unsigned n) const;
  LaurentCoeffs row(unsigned k) const;

 private:
  RayleighTarget target_;
  unsigned k_max_;
  unsigned n_max_;
  std::vector<std::vector<Rational>> rows_;  // rows_[k-1][n]
};

}  // namespace besselrad
