#include "besselrad/rational.hpp"

#include <cctype>
#include <cmath>
#include <ostream>

#include "besselrad/error.hpp"

namespace besselrad {

namespace {

Integer pow_integer(const Integer& base, unsigned long exponent) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

Integer parse_digits(std::string_view digits, std::string_view original) {
  if (digits.empty()) {
    throw Error(ErrorKind::InvalidArgument, "not a number: '" + std::string(original) + "'");
  }
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw Error(ErrorKind::InvalidArgument, "not a number: '" + std::string(original) + "'");
    }
  }
  return Integer(std::string(digits), 10);
}

}  // namespace

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational::Rational(long numerator, long denominator)
    : Rational(Integer(numerator), Integer(denominator)) {}

Rational::Rational(const Integer& value) : value_(value) {}

Rational::Rational(const Integer& numerator, const Integer& denominator) {
  if (denominator == 0) {
    throw Error(ErrorKind::DivisionByZero, "rational with zero denominator");
  }
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const std::string_view original = text;
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw Error(ErrorKind::InvalidArgument, "empty number");

  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const Rational num = parse(text.substr(0, slash));
    const Rational den = parse(text.substr(slash + 1));
    if (!num.is_integer() || !den.is_integer()) {
      throw Error(ErrorKind::InvalidArgument, "fraction parts must be integers: '" + std::string(original) + "'");
    }
    return num / den;
  }

  bool negative = false;
  if (text.front() == '+' || text.front() == '-') {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }

  long exponent = 0;
  if (const auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_text = text.substr(e + 1);
    bool exp_negative = false;
    if (!exp_text.empty() && (exp_text.front() == '+' || exp_text.front() == '-')) {
      exp_negative = exp_text.front() == '-';
      exp_text.remove_prefix(1);
    }
    const Integer exp_value = parse_digits(exp_text, original);
    if (!exp_value.fits_slong_p() || exp_value > 100000) {
      throw Error(ErrorKind::InvalidArgument, "exponent out of range: '" + std::string(original) + "'");
    }
    exponent = exp_negative ? -exp_value.get_si() : exp_value.get_si();
    text = text.substr(0, e);
  }

  std::string digits;
  if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    const std::string_view int_part = text.substr(0, dot);
    const std::string_view frac_part = text.substr(dot + 1);
    if (int_part.empty() && frac_part.empty()) {
      throw Error(ErrorKind::InvalidArgument, "not a number: '" + std::string(original) + "'");
    }
    digits = std::string(int_part) + std::string(frac_part);
    exponent -= static_cast<long>(frac_part.size());
  } else {
    digits = std::string(text);
  }

  Rational value(parse_digits(digits, original));
  value *= pow10(exponent);
  return negative ? -value : value;
}

Rational Rational::from_double(double value) {
  if (!std::isfinite(value)) throw Error(ErrorKind::InvalidArgument, "non-finite value");
  mpq_class q;
  mpq_set_d(q.get_mpq_t(), value);
  return Rational(q);
}

Rational Rational::pow2(long exponent) {
  const Integer p = pow_integer(Integer(2), static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  return exponent < 0 ? Rational(Integer(1), p) : Rational(p);
}

Rational Rational::pow10(long exponent) {
  const Integer p = pow_integer(Integer(10), static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  return exponent < 0 ? Rational(Integer(1), p) : Rational(p);
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::pow(long exponent) const {
  if (exponent < 0) {
    if (is_zero()) throw Error(ErrorKind::DivisionByZero, "zero raised to a negative power");
    return reciprocal().pow(-exponent);
  }
  const auto e = static_cast<unsigned long>(exponent);
  return Rational(pow_integer(value_.get_num(), e), pow_integer(value_.get_den(), e));
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

Rational Rational::reciprocal() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "reciprocal of zero");
  return Rational(value_.get_den(), value_.get_num());
}

Integer Rational::floor() const {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return out;
}

Integer Rational::ceil() const {
  Integer out;
  mpz_cdiv_q(out.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return out;
}

Rational Rational::round_dyadic(unsigned bits) const {
  const Rational scaled = *this * pow2(bits);
  // Round half away from zero.
  Integer n = (scaled.abs() + Rational(1, 2)).floor();
  if (sign() < 0) n = -n;
  return Rational(n) * pow2(-static_cast<long>(bits));
}

std::size_t Rational::bit_size() const {
  return mpz_sizeinbase(value_.get_num_mpz_t(), 2) + mpz_sizeinbase(value_.get_den_mpz_t(), 2);
}

std::string Rational::str() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& value) { return os << value.str(); }

Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

RootEnclosure kth_root(const Rational& x, unsigned k, unsigned bits) {
  if (k == 0) throw Error(ErrorKind::InvalidArgument, "zeroth root");
  if (x.sign() < 0) throw Error(ErrorKind::NegativeArgument, "root of a negative number");
  if (k == 1) return {x, x, true};

  Integer num_root;
  Integer den_root;
  const Integer num = x.numerator();
  const Integer den = x.denominator();
  const bool num_exact = mpz_root(num_root.get_mpz_t(), num.get_mpz_t(), k) != 0;
  const bool den_exact = mpz_root(den_root.get_mpz_t(), den.get_mpz_t(), k) != 0;
  if (num_exact && den_exact) {
    const Rational r(num_root, den_root);
    return {r, r, true};
  }

  // floor((x * 2^(k*bits))^(1/k)) / 2^bits, and its ceiling counterpart.
  const Rational scaled = x * Rational::pow2(static_cast<long>(k) * bits);
  const Integer lo_arg = scaled.floor();
  Integer lo_root;
  mpz_root(lo_root.get_mpz_t(), lo_arg.get_mpz_t(), k);

  const Integer hi_arg = scaled.ceil();
  Integer hi_root;
  if (mpz_root(hi_root.get_mpz_t(), hi_arg.get_mpz_t(), k) == 0) hi_root += 1;

  const Rational unit = Rational::pow2(-static_cast<long>(bits));
  return {Rational(lo_root) * unit, Rational(hi_root) * unit, false};
}

unsigned ceil_log2_ratio(const Rational& value, const Rational& goal) {
  if (goal.sign() <= 0 || value.sign() <= 0) {
    throw Error(ErrorKind::InvalidArgument, "ceil_log2_ratio needs positive arguments");
  }
  unsigned n = 0;
  Rational bound = goal;
  while (value > bound) {
    bound *= 2;
    ++n;
  }
  return n;
}

}  // namespace besselrad
