#ifndef POINCARE_LEGENDRE_HPP
#define POINCARE_LEGENDRE_HPP

#include <memory>
#include <vector>

#include "poincare/polynomial.hpp"
#include "poincare/report.hpp"

namespace poincare {

/// Legendre polynomials P_k, their Rodrigues-type companions p_k with
/// p_k'' = P_k, and the |t - x| Fourier coefficients Gamma_k as
/// polynomials in x, for k = 0..max_degree.
struct LegendreTable {
  int max_degree = 0;
  /// P[k], k = 0..max_degree.
  std::vector<RationalPolynomial> P;
  /// p_low[k] = d^{k-2}/dt^{k-2} (t^2-1)^k / (2^k k!) for k >= 2; entries 0 and 1 are zero.
  std::vector<RationalPolynomial> p_low;
  /// gamma[k](x) = (integral of P_k(s)|s-x|) / (integral of P_k^2).
  std::vector<RationalPolynomial> gamma;

  const RationalPolynomial& legendre(int k) const;
  const RationalPolynomial& companion(int k) const;
  const RationalPolynomial& gamma_coefficient(int k) const;
};

/// P_k from the Bonnet recurrence, p_k from direct Rodrigues expansion.
/// Throws std::invalid_argument when max_degree < 2.
LegendreTable build_table(int max_degree);

/// (1 / (2^k k!)) d^k/dt^k (t^2 - 1)^k by direct expansion.
RationalPolynomial legendre_rodrigues(int k);

/// Leading coefficient (2k)! / (2^k (k!)^2).
Rational legendre_leading_coefficient(int k);

/// Shared table covering at least `min_degree`, grown on demand.
/// Thread-safe; returned tables are immutable.
std::shared_ptr<const LegendreTable> shared_table(int min_degree);

/// Evaluates the classical closed-form Legendre identities exactly for every
/// degree in the table and reports the first counterexample of each.
Report check_identities(const LegendreTable& table);

}  // namespace poincare

#endif  // POINCARE_LEGENDRE_HPP
