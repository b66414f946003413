#ifndef POINCARE_KINK_FUNCTION_HPP
#define POINCARE_KINK_FUNCTION_HPP

#include <stdexcept>
#include <utility>

#include "poincare/polynomial.hpp"

namespace poincare {

/// Continuous two-piece polynomial on [-1, 1] with a single kink.
///
/// `left` is valid on [-1, kink], `right` on [kink, 1]. Both pieces are
/// stored fully expanded, so moments and energies reduce to ordinary
/// definite integrals on each side.
template <class Scalar>
class KinkFunction {
 public:
  /// Throws std::invalid_argument if the pieces disagree at the kink.
  KinkFunction(Scalar kink, Polynomial<Scalar> left, Polynomial<Scalar> right)
      : kink_(std::move(kink)), left_(std::move(left)), right_(std::move(right)) {
    if (left_(kink_) != right_(kink_)) {
      throw std::invalid_argument("KinkFunction pieces are discontinuous at the kink");
    }
  }

  /// base(t) + slope * |t - kink|
  static KinkFunction from_abs(const Scalar& kink, const Polynomial<Scalar>& base, const Scalar& slope) {
    const Polynomial<Scalar> t_minus_kink{-kink, Scalar(1)};
    return KinkFunction(kink, base - slope * t_minus_kink, base + slope * t_minus_kink);
  }

  const Scalar& kink() const { return kink_; }
  const Polynomial<Scalar>& left() const { return left_; }
  const Polynomial<Scalar>& right() const { return right_; }

  Scalar operator()(const Scalar& t) const { return t <= kink_ ? left_(t) : right_(t); }

  /// One-sided derivatives; at the kink itself the left piece is used.
  Scalar derivative_at(const Scalar& t) const {
    return t <= kink_ ? derivative(left_)(t) : derivative(right_)(t);
  }

  /// Integral of t^k f(t) over [-1, 1].
  Scalar moment(int k) const {
    const auto tk = Polynomial<Scalar>::monomial(k);
    return definite_integral(tk * left_, Scalar(-1), kink_) + definite_integral(tk * right_, kink_, Scalar(1));
  }

  /// Integral of f'(t)^2 over [-1, 1].
  Scalar energy() const {
    const auto dl = derivative(left_);
    const auto dr = derivative(right_);
    return definite_integral(dl * dl, Scalar(-1), kink_) + definite_integral(dr * dr, kink_, Scalar(1));
  }

  template <class Other>
  KinkFunction<Other> cast() const {
    return KinkFunction<Other>::unchecked(detail::convert<Other>(kink_), left_.template cast<Other>(),
                                          right_.template cast<Other>());
  }

  /// Builds without the continuity check (rounded scalars).
  static KinkFunction unchecked(Scalar kink, Polynomial<Scalar> left, Polynomial<Scalar> right) {
    KinkFunction out;
    out.kink_ = std::move(kink);
    out.left_ = std::move(left);
    out.right_ = std::move(right);
    return out;
  }

 private:
  KinkFunction() = default;

  template <class>
  friend class KinkFunction;

  Scalar kink_{};
  Polynomial<Scalar> left_;
  Polynomial<Scalar> right_;
};

}  // namespace poincare

#endif  // POINCARE_KINK_FUNCTION_HPP
