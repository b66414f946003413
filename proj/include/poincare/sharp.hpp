#ifndef POINCARE_SHARP_HPP
#define POINCARE_SHARP_HPP

#include <stdexcept>
#include <vector>

#include "poincare/kink_function.hpp"
#include "poincare/legendre.hpp"
#include "poincare/polynomial.hpp"

namespace poincare {

/// Sharp constant of |y(x)| <= B (integral of y'^2)^(1/2) over functions on
/// [-1, 1] whose first m moments vanish, at one interior point x.
///
/// Q is the degree m+1 polynomial with Q(x) = 0, Q'(-1) = -1, Q'(1) = 1 and
/// Legendre expansion a + sum_{k<m} Gamma_k(x) P_k + alpha P_m + beta P_{m+1};
/// the extremal is c (Q(t) - |t - x|) + 1 and Bsq = 1/(2c).
struct SharpSolution {
  int m = 0;
  Rational x;
  RationalPolynomial Q;
  Rational a;
  Rational alpha;
  Rational beta;
  Rational c;
  Rational Bsq;

  double B() const;
};

/// The same construction with x kept symbolic: every field is a polynomial
/// in x and Bsq_poly = (x^2 + 1 - 2 a_poly) / 4.
struct SharpFamily {
  int m = 0;
  RationalPolynomial a_poly;
  RationalPolynomial alpha_poly;
  RationalPolynomial beta_poly;
  RationalPolynomial Bsq_poly;
};

/// Thrown for x = +-1, where the interior construction does not apply.
class EndpointDomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Throws EndpointDomainError for |x| >= 1 and std::invalid_argument for m < 1.
SharpSolution solve_interior(int m, const Rational& x, const LegendreTable& table);
SharpSolution solve_interior(int m, const Rational& x);

/// Throws std::invalid_argument for m < 1.
SharpFamily solve_family(int m, const LegendreTable& table);
SharpFamily solve_family(int m);

/// Extremal function normalized to y(x) = 1.
KinkFunction<Rational> extremal(const SharpSolution& sol);

/// Integral of (d/dt (Q(t) - |t - x|))^2 over [-1, 1]; equals 2/c.
Rational energy_of_extremal(const SharpSolution& sol);

/// Moments of the extremal, k = 0..m-1; all zero for a valid solution.
std::vector<Rational> moment_residuals(const SharpSolution& sol);

/// B_m(+-1)^2 = 2/(m(m+2)).
Rational endpoint_constant(int m);

/// Endpoint extremal for x = side (+1 or -1), normalized to 1 at t = side.
RationalPolynomial endpoint_extremal(int m, int side, const LegendreTable& table);
RationalPolynomial endpoint_extremal(int m, int side);

/// Closed double-factorial expression for B_{2n+1}(0)^2 = B_{2n+2}(0)^2, n >= 2.
Rational bsq_zero_closed(int n);

}  // namespace poincare

#endif  // POINCARE_SHARP_HPP
