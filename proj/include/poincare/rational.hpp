#ifndef POINCARE_RATIONAL_HPP
#define POINCARE_RATIONAL_HPP

#include <compare>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace poincare {

using BigInt = mpz_class;

/// Exact rational number, always stored reduced with a positive denominator.
///
/// Zero is 0/1. Every arithmetic operation returns a canonical value, so
/// structural equality coincides with numeric equality.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& value) : value_(value) {}  // NOLINT(google-explicit-constructor)

  /// Throws std::invalid_argument when denominator is zero.
  Rational(const BigInt& numerator, const BigInt& denominator);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  int sign() const { return sgn(value_); }
  bool is_integer() const { return value_.get_den() == 1; }

  double to_double() const { return value_.get_d(); }

  /// "p/q" form, e.g. "1/8", "-3/1", "0/1".
  std::string str() const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  /// Throws std::domain_error on division by zero.
  Rational& operator/=(const Rational& rhs);

  friend Rational operator-(const Rational& r);
  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

  const mpq_class& raw() const { return value_; }

 private:
  mpq_class value_{0};
};

/// n/d reduced. Throws std::invalid_argument when d == 0.
Rational rat(long n, long d);

Rational abs(const Rational& r);
Rational inverse(const Rational& r);
/// Integer power; negative exponents invert (zero base then throws).
Rational pow(const Rational& base, int exponent);

/// Parses "p/q", "n", or an exact decimal such as "-0.125" or "9e-1".
/// Throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

BigInt factorial(unsigned n);
/// n!! with the conventions (-1)!! = 0!! = 1.
BigInt double_factorial(int n);
BigInt binomial(unsigned n, unsigned k);

}  // namespace poincare

#endif  // POINCARE_RATIONAL_HPP
