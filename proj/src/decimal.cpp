#include "besselrad/decimal.hpp"

#include "besselrad/error.hpp"

namespace besselrad {

namespace {

// Largest e with 10^e <= x, for x > 0.
long decimal_exponent(const Rational& x) {
  long e = static_cast<long>(mpz_sizeinbase(x.numerator().get_mpz_t(), 10)) -
           static_cast<long>(mpz_sizeinbase(x.denominator().get_mpz_t(), 10));
  while (Rational::pow10(e) > x) --e;
  while (Rational::pow10(e + 1) <= x) ++e;
  return e;
}

Integer round_integer(const Rational& scaled, Rounding mode) {
  switch (mode) {
    case Rounding::Down: return scaled.floor();
    case Rounding::Up: return scaled.ceil();
    case Rounding::Nearest: break;
  }
  const Integer fl = scaled.floor();
  const Rational frac = scaled - Rational(fl);
  const int c = (frac <=> Rational(1, 2)) < 0 ? -1 : (frac == Rational(1, 2) ? 0 : 1);
  if (c < 0) return fl;
  if (c > 0) return fl + 1;
  return mpz_even_p(fl.get_mpz_t()) ? fl : Integer(fl + 1);
}

}  // namespace

std::string to_decimal(const Rational& value, int digits, Rounding mode) {
  if (digits < 1) throw Error(ErrorKind::InvalidArgument, "digits must be positive");
  if (value.is_zero()) return "0";

  const bool negative = value.sign() < 0;
  const Rational magnitude = value.abs();
  // Directed rounding of the magnitude flips for negative values.
  Rounding mag_mode = mode;
  if (negative && mode == Rounding::Down) mag_mode = Rounding::Up;
  else if (negative && mode == Rounding::Up) mag_mode = Rounding::Down;

  long exponent = decimal_exponent(magnitude);
  Integer mantissa = round_integer(magnitude * Rational::pow10(digits - 1 - exponent), mag_mode);
  // Rounding may carry into a new digit (9.99 -> 10.0).
  if (mantissa >= Integer(Rational::pow10(digits).numerator())) {
    ++exponent;
    mantissa = round_integer(magnitude * Rational::pow10(digits - 1 - exponent), mag_mode);
  }
  if (mantissa == 0) return "0";

  std::string body = mantissa.get_str();
  while (static_cast<int>(body.size()) < digits) body.insert(body.begin(), '0');

  std::string out;
  if (exponent >= -5 && exponent < 15) {
    if (exponent >= 0) {
      const auto int_len = static_cast<std::size_t>(exponent + 1);
      if (body.size() <= int_len) {
        out = body + std::string(int_len - body.size(), '0');
      } else {
        out = body.substr(0, int_len) + "." + body.substr(int_len);
      }
    } else {
      out = "0." + std::string(static_cast<std::size_t>(-exponent - 1), '0') + body;
    }
  } else {
    out = body.substr(0, 1);
    if (body.size() > 1) out += "." + body.substr(1);
    out += "e" + std::to_string(exponent);
  }
  return negative ? "-" + out : out;
}

}  // namespace besselrad
