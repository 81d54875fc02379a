#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "besselrad/rayleigh.hpp"

namespace besselrad {

/// A_{alpha,n}(a_1, ..., a_n), the coefficient of z^n in (1 + sum a_k z^k)^alpha,
/// by the sum over partitions l_1 + 2 l_2 + ... + n l_n = n. `a` holds a_1..a_n
/// (missing trailing entries count as zero).
Rational potential_poly(const Rational& alpha, std::span<const Rational> a, unsigned n);

/// A_{alpha,0}..A_{alpha,n_max} by the recurrence
/// n A_n = sum_{k=1}^n (alpha k - (n - k)) a_k A_{n-k}.
std::vector<Rational> potential_poly_sequence(const Rational& alpha, std::span<const Rational> a, unsigned n_max);

/// pi_0..pi_M, the coefficients of (1 + sum kappa_n t^n)^(-1), with
/// kappa[0] = kappa_1. Uses pi_m = sum_p (-1)^p kappa_1^p A_{p,m-p}(f),
/// f_n = kappa_{n+1} / kappa_1, or direct inversion when kappa_1 = 0.
std::vector<Rational> pi_coeffs(std::span<const Rational> kappa, unsigned m_max);

/// Power sums of the family's zeros from the logarithmic derivative
/// -w S_{n+1} = sum_m pi_m xi_{n-m}, w = 2 for t = z^2 families, 1 otherwise.
PowerSums power_sums_via_potential(SeriesFamily family, const Order& nu, std::size_t k_max);

}  // namespace besselrad
