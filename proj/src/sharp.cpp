#include "poincare/sharp.hpp"

#include <cmath>
#include <string>

namespace poincare {

namespace {

void require_order(int m) {
  if (m < 1) throw std::invalid_argument("moment count m must be at least 1, got " + std::to_string(m));
}

const LegendreTable& checked(const LegendreTable& table, int m) {
  if (table.max_degree < m + 1) {
    throw std::invalid_argument("Legendre table of degree " + std::to_string(table.max_degree) +
                                " is too small for m = " + std::to_string(m));
  }
  return table;
}

/// P'_k(1) = k(k+1)/2 and P'_k(-1) = (-1)^(k-1) k(k+1)/2.
Rational legendre_slope(int k, int side) {
  const Rational s = rat(static_cast<long>(k) * (k + 1), 2);
  return side > 0 || k % 2 == 1 ? s : -s;
}

/// Solves alpha P'_m(s) + beta P'_{m+1}(s) = rhs(s) for s = +1, -1.
/// The matrix is constant with determinant (-1)^m m (m+1)^2 (m+2) / 2.
template <class Value>
std::pair<Value, Value> solve_top_coefficients(int m, const Value& rhs_plus, const Value& rhs_minus) {
  const Rational a11 = legendre_slope(m, +1);
  const Rational a12 = legendre_slope(m + 1, +1);
  const Rational a21 = legendre_slope(m, -1);
  const Rational a22 = legendre_slope(m + 1, -1);
  const Rational det = a11 * a22 - a12 * a21;
  Value alpha = (a22 * rhs_plus - a12 * rhs_minus) / det;
  Value beta = (a11 * rhs_minus - a21 * rhs_plus) / det;
  return {std::move(alpha), std::move(beta)};
}

}  // namespace

double SharpSolution::B() const { return std::sqrt(Bsq.to_double()); }

SharpSolution solve_interior(int m, const Rational& x, const LegendreTable& table) {
  require_order(m);
  if (x <= Rational(-1) || x >= Rational(1)) {
    throw EndpointDomainError("x = " + x.str() + " is not in (-1, 1); use endpoint_constant for x = +-1");
  }
  checked(table, m);

  RationalPolynomial fixed;
  for (int k = 1; k <= m - 1; ++k) {
    fixed += table.gamma_coefficient(k)(x) * table.legendre(k);
  }
  const auto fixed_slope = derivative(fixed);
  const auto [alpha, beta] =
      solve_top_coefficients(m, Rational(1) - fixed_slope(Rational(1)), Rational(-1) - fixed_slope(Rational(-1)));

  const auto& pm = table.legendre(m);
  const auto& pm1 = table.legendre(m + 1);

  SharpSolution sol;
  sol.m = m;
  sol.x = x;
  sol.alpha = alpha;
  sol.beta = beta;
  sol.a = -(fixed(x) + alpha * pm(x) + beta * pm1(x));
  sol.Q = RationalPolynomial::constant(sol.a) + fixed + alpha * pm + beta * pm1;
  sol.c = Rational(2) / (x * x + Rational(1) - Rational(2) * sol.a);
  sol.Bsq = inverse(Rational(2) * sol.c);
  return sol;
}

SharpSolution solve_interior(int m, const Rational& x) {
  require_order(m);
  return solve_interior(m, x, *shared_table(m + 1));
}

SharpFamily solve_family(int m, const LegendreTable& table) {
  require_order(m);
  checked(table, m);

  // Everything below is a polynomial in x; P_k(+-1), P'_k(+-1) are constants.
  const auto x = RationalPolynomial::variable();
  RationalPolynomial slope_plus;
  RationalPolynomial slope_minus;
  RationalPolynomial fixed_at_x;
  for (int k = 1; k <= m - 1; ++k) {
    const auto& gamma = table.gamma_coefficient(k);
    const auto dp = derivative(table.legendre(k));
    slope_plus += dp(Rational(1)) * gamma;
    slope_minus += dp(Rational(-1)) * gamma;
    fixed_at_x += gamma * table.legendre(k);
  }
  const auto one = RationalPolynomial::constant(1);
  auto [alpha, beta] = solve_top_coefficients(m, one - slope_plus, -one - slope_minus);

  SharpFamily fam;
  fam.m = m;
  fam.a_poly = -(fixed_at_x + alpha * table.legendre(m) + beta * table.legendre(m + 1));
  fam.alpha_poly = std::move(alpha);
  fam.beta_poly = std::move(beta);
  fam.Bsq_poly = (x * x + one - Rational(2) * fam.a_poly) / Rational(4);
  return fam;
}

SharpFamily solve_family(int m) {
  require_order(m);
  return solve_family(m, *shared_table(m + 1));
}

KinkFunction<Rational> extremal(const SharpSolution& sol) {
  return KinkFunction<Rational>::from_abs(sol.x, sol.c * sol.Q + RationalPolynomial::constant(1), -sol.c);
}

Rational energy_of_extremal(const SharpSolution& sol) {
  return KinkFunction<Rational>::from_abs(sol.x, sol.Q, Rational(-1)).energy();
}

std::vector<Rational> moment_residuals(const SharpSolution& sol) {
  const auto y = extremal(sol);
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(sol.m));
  for (int k = 0; k < sol.m; ++k) out.push_back(y.moment(k));
  return out;
}

Rational endpoint_constant(int m) {
  require_order(m);
  return rat(2, static_cast<long>(m) * (m + 2));
}

RationalPolynomial endpoint_extremal(int m, int side, const LegendreTable& table) {
  require_order(m);
  if (side != 1 && side != -1) throw std::invalid_argument("endpoint side must be +1 or -1");
  checked(table, m);
  auto y = (Rational(m + 2) * table.legendre(m) + Rational(m) * table.legendre(m + 1)) / Rational(2 * m + 2);
  return side > 0 ? y : reflect(y);
}

RationalPolynomial endpoint_extremal(int m, int side) {
  require_order(m);
  return endpoint_extremal(m, side, *shared_table(m + 1));
}

Rational bsq_zero_closed(int n) {
  if (n < 2) throw std::invalid_argument("bsq_zero_closed requires n >= 2, got " + std::to_string(n));
  const auto dfr = [](int num, int den) { return Rational(double_factorial(num), double_factorial(den)); };
  const auto sign = [](int e) { return e % 2 == 0 ? Rational(1) : Rational(-1); };

  const Rational tail = dfr(2 * n + 1, 2 * n + 2);
  const Rational scale(static_cast<long>(2) * (n + 1) * (2 * n + 3));

  Rational out = rat(3, 32);
  for (int k = 2; k <= n; ++k) {
    out -= rat(4 * k + 1, 2) * dfr(2 * k - 3, 2 * k + 2) * dfr(2 * k - 1, 2 * k);
  }
  out += Rational(7) * sign(n) / Rational(static_cast<long>(16) * (n + 1) * (2 * n + 3)) * tail;
  for (int k = 2; k <= n; ++k) {
    out -= sign(n - k) * Rational(static_cast<long>(k) * (2 * k + 1) * (4 * k + 1)) / scale *
           dfr(2 * k - 3, 2 * k + 2) * tail;
  }
  return out;
}

}  // namespace poincare
