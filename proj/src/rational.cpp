#include "poincare/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace poincare {

Rational::Rational(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) {
    throw std::invalid_argument("rational with zero denominator");
  }
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

std::string Rational::str() const {
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

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
  if (rhs.is_zero()) {
    throw std::domain_error("rational division by zero");
  }
  value_ /= rhs.value_;
  return *this;
}

Rational operator-(const Rational& r) {
  Rational out;
  out.value_ = -r.value_;
  return out;
}

Rational rat(long n, long d) { return Rational(BigInt(n), BigInt(d)); }

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Rational inverse(const Rational& r) { return Rational(1) / r; }

Rational pow(const Rational& base, int exponent) {
  if (exponent < 0) {
    return inverse(pow(base, -exponent));
  }
  BigInt num;
  BigInt den;
  mpz_pow_ui(num.get_mpz_t(), base.numerator().get_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), base.denominator().get_mpz_t(), static_cast<unsigned long>(exponent));
  return Rational(num, den);
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

BigInt parse_integer(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) {
    throw std::invalid_argument("malformed integer: '" + std::string(s) + "'");
  }
  BigInt value(std::string(s), 10);
  return negative ? BigInt(-value) : value;
}

BigInt pow10(unsigned long exponent) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), 10, exponent);
  return out;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) {
    throw std::invalid_argument("empty rational");
  }

  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const BigInt num = parse_integer(text.substr(0, slash));
    const std::string_view den_text = text.substr(slash + 1);
    if (!all_digits(den_text)) {
      throw std::invalid_argument("malformed denominator: '" + std::string(text) + "'");
    }
    return Rational(num, BigInt(std::string(den_text), 10));
  }

  bool negative = false;
  std::string_view rest = text;
  if (rest.front() == '-' || rest.front() == '+') {
    negative = rest.front() == '-';
    rest.remove_prefix(1);
  }

  long exponent = 0;
  if (const auto e = rest.find_first_of("eE"); e != std::string_view::npos) {
    const BigInt exp_value = parse_integer(rest.substr(e + 1));
    if (exp_value > 4096 || exp_value < -4096) {
      throw std::invalid_argument("exponent out of range: '" + std::string(text) + "'");
    }
    exponent = exp_value.get_si();
    rest = rest.substr(0, e);
  }

  std::string_view int_part = rest;
  std::string_view frac_part;
  if (const auto dot = rest.find('.'); dot != std::string_view::npos) {
    int_part = rest.substr(0, dot);
    frac_part = rest.substr(dot + 1);
  }
  if ((int_part.empty() && frac_part.empty()) || (!int_part.empty() && !all_digits(int_part)) ||
      (!frac_part.empty() && !all_digits(frac_part))) {
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  }

  const std::string digits = std::string(int_part) + std::string(frac_part);
  BigInt num(digits, 10);
  if (negative) num = -num;
  exponent -= static_cast<long>(frac_part.size());
  if (exponent >= 0) {
    return Rational(BigInt(num * pow10(static_cast<unsigned long>(exponent))));
  }
  return Rational(num, pow10(static_cast<unsigned long>(-exponent)));
}

BigInt factorial(unsigned n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

BigInt double_factorial(int n) {
  if (n < -1) {
    throw std::invalid_argument("double factorial of n < -1");
  }
  BigInt out = 1;
  for (int k = n; k > 1; k -= 2) out *= k;
  return out;
}

BigInt binomial(unsigned n, unsigned k) {
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

}  // namespace poincare
