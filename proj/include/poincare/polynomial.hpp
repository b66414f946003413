#ifndef POINCARE_POLYNOMIAL_HPP
#define POINCARE_POLYNOMIAL_HPP

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

#include "poincare/rational.hpp"

namespace poincare {

namespace detail {

template <class To, class From>
To convert(const From& v) {
  if constexpr (std::is_same_v<To, From>) {
    return v;
  } else if constexpr (std::is_same_v<From, Rational>) {
    return static_cast<To>(v.to_double());
  } else {
    return static_cast<To>(v);
  }
}

}  // namespace detail

/// Dense univariate polynomial, coefficients in ascending degree order.
///
/// The representation is canonical: the highest stored coefficient is
/// nonzero and the zero polynomial has no coefficients (degree -1).
template <class Scalar>
class Polynomial {
 public:
  using scalar_type = Scalar;

  Polynomial() = default;
  explicit Polynomial(std::vector<Scalar> coefficients) : coeffs_(std::move(coefficients)) { trim(); }
  Polynomial(std::initializer_list<Scalar> coefficients) : coeffs_(coefficients) { trim(); }

  static Polynomial constant(const Scalar& c) { return Polynomial(std::vector<Scalar>{c}); }

  /// c * t^degree
  static Polynomial monomial(int degree, const Scalar& c = Scalar(1)) {
    std::vector<Scalar> coeffs(static_cast<std::size_t>(degree) + 1, Scalar(0));
    coeffs.back() = c;
    return Polynomial(std::move(coeffs));
  }

  /// The polynomial t.
  static Polynomial variable() { return monomial(1); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Scalar>& coefficients() const { return coeffs_; }

  /// Coefficient of t^i; zero beyond the degree.
  Scalar coefficient(int i) const {
    return i >= 0 && i <= degree() ? coeffs_[static_cast<std::size_t>(i)] : Scalar(0);
  }

  Scalar leading_coefficient() const { return is_zero() ? Scalar(0) : coeffs_.back(); }

  /// Horner evaluation.
  Scalar operator()(const Scalar& t) const {
    Scalar acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc = acc * t + *it;
    }
    return acc;
  }

  template <class Other>
  Polynomial<Other> cast() const {
    std::vector<Other> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(detail::convert<Other>(c));
    return Polynomial<Other>(std::move(out));
  }

  Polynomial& operator+=(const Polynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Scalar(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
  }

  Polynomial& operator-=(const Polynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Scalar(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
  }

  Polynomial& operator*=(const Scalar& s) {
    for (auto& c : coeffs_) c *= s;
    trim();
    return *this;
  }

  Polynomial& operator/=(const Scalar& s) {
    for (auto& c : coeffs_) c /= s;
    trim();
    return *this;
  }

  Polynomial& operator*=(const Polynomial& rhs) { return *this = *this * rhs; }

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator-(Polynomial p) {
    for (auto& c : p.coeffs_) c = -c;
    return p;
  }
  friend Polynomial operator*(Polynomial p, const Scalar& s) { return p *= s; }
  friend Polynomial operator*(const Scalar& s, Polynomial p) { return p *= s; }
  friend Polynomial operator/(Polynomial p, const Scalar& s) { return p /= s; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Scalar> out(a.coeffs_.size() + b.coeffs_.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == Scalar(0)) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        out[i + j] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return Polynomial(std::move(out));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == Scalar(0)) coeffs_.pop_back();
  }

  std::vector<Scalar> coeffs_;
};

using RationalPolynomial = Polynomial<Rational>;

template <class Scalar>
Polynomial<Scalar> pow(const Polynomial<Scalar>& p, unsigned exponent) {
  Polynomial<Scalar> out = Polynomial<Scalar>::constant(Scalar(1));
  Polynomial<Scalar> base = p;
  while (exponent > 0) {
    if (exponent & 1U) out *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return out;
}

/// k-th derivative.
template <class Scalar>
Polynomial<Scalar> derivative(const Polynomial<Scalar>& p, int order = 1) {
  if (order < 0) throw std::invalid_argument("negative derivative order");
  std::vector<Scalar> coeffs = p.coefficients();
  for (int step = 0; step < order && !coeffs.empty(); ++step) {
    for (std::size_t i = 1; i < coeffs.size(); ++i) {
      coeffs[i - 1] = coeffs[i] * Scalar(static_cast<long>(i));
    }
    coeffs.pop_back();
  }
  return Polynomial<Scalar>(std::move(coeffs));
}

/// Antiderivative with zero constant term.
template <class Scalar>
Polynomial<Scalar> antiderivative(const Polynomial<Scalar>& p) {
  if (p.is_zero()) return {};
  const auto& c = p.coefficients();
  std::vector<Scalar> out(c.size() + 1, Scalar(0));
  for (std::size_t i = 0; i < c.size(); ++i) {
    out[i + 1] = c[i] / Scalar(static_cast<long>(i + 1));
  }
  return Polynomial<Scalar>(std::move(out));
}

template <class Scalar>
Scalar definite_integral(const Polynomial<Scalar>& p, const Scalar& a, const Scalar& b) {
  const auto primitive = antiderivative(p);
  return primitive(b) - primitive(a);
}

/// p(-t)
template <class Scalar>
Polynomial<Scalar> reflect(const Polynomial<Scalar>& p) {
  std::vector<Scalar> coeffs = p.coefficients();
  for (std::size_t i = 1; i < coeffs.size(); i += 2) coeffs[i] = -coeffs[i];
  return Polynomial<Scalar>(std::move(coeffs));
}

/// p(q(t))
template <class Scalar>
Polynomial<Scalar> compose(const Polynomial<Scalar>& p, const Polynomial<Scalar>& q) {
  Polynomial<Scalar> out;
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    out = out * q + Polynomial<Scalar>::constant(*it);
  }
  return out;
}

/// Integral of p(t)|t - x| over [-1, 1], split at x.
template <class Scalar>
Scalar abs_kernel_integral(const Polynomial<Scalar>& p, const Scalar& x) {
  if (x < Scalar(-1) || x > Scalar(1)) {
    throw std::domain_error("abs_kernel_integral: kink outside [-1, 1]");
  }
  const Polynomial<Scalar> t_minus_x{-x, Scalar(1)};
  const auto weighted = p * t_minus_x;
  return definite_integral(weighted, x, Scalar(1)) - definite_integral(weighted, Scalar(-1), x);
}

}  // namespace poincare

#endif  // POINCARE_POLYNOMIAL_HPP
