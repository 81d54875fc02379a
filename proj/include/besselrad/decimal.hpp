#pragma once

#include <string>

#include "besselrad/rational.hpp"

namespace besselrad {

enum class Rounding { Nearest, Down, Up };

/// Renders `value` with `digits` significant digits, rounded exactly from the
/// rational value (ties to even for Nearest; Down/Up round toward -inf/+inf).
/// Plain notation is used for decimal exponents in [-5, 15), scientific
/// ("1.25e-12") otherwise. Output is locale-independent.
std::string to_decimal(const Rational& value, int digits, Rounding mode = Rounding::Nearest);

}  // namespace besselrad
