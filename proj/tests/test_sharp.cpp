#include <gtest/gtest.h>

#include "poincare/sharp.hpp"
#include "poincare/verify.hpp"

using poincare::rat;
using poincare::Rational;
using Poly = poincare::RationalPolynomial;

namespace {

const std::vector<Rational>& grid_points() {
  static const auto points = poincare::verification_points();
  return points;
}

}  // namespace

TEST(SolveInterior, OneMomentAtZero) {
  const auto sol = poincare::solve_interior(1, Rational(0));
  EXPECT_EQ(sol.a, rat(1, 6));
  EXPECT_EQ(sol.alpha, Rational(0));
  EXPECT_EQ(sol.beta, rat(1, 3));
  EXPECT_EQ(sol.c, Rational(3));
  EXPECT_EQ(sol.Bsq, rat(1, 6));
  EXPECT_NEAR(sol.B(), 0.408248290463863, 1e-15);
  // Q_2(t) = (t^2 - x^2) / 2
  EXPECT_EQ(sol.Q, (Poly{0, 0, rat(1, 2)}));
}

TEST(SolveInterior, KnownValues) {
  EXPECT_EQ(poincare::solve_interior(2, Rational(0)).Bsq, rat(1, 6));
  EXPECT_EQ(poincare::solve_interior(1, rat(1, 2)).Bsq, rat(7, 24));
  EXPECT_EQ(poincare::solve_interior(2, rat(1, 2)).Bsq, rat(97, 1024));
  EXPECT_EQ(poincare::solve_interior(3, Rational(0)).Bsq, rat(99, 1280));
  EXPECT_EQ(poincare::solve_interior(4, Rational(0)).Bsq, rat(99, 1280));
}

TEST(SolveInterior, TwoMomentsCoefficients) {
  // alpha = 1/3, beta = -(x^3 - 3x)/12, a = (4 + 33x^2 - 30x^4 + 5x^6)/24.
  for (const auto& x : grid_points()) {
    const auto sol = poincare::solve_interior(2, x);
    EXPECT_EQ(sol.alpha, rat(1, 3));
    EXPECT_EQ(sol.beta, -(x * x * x - Rational(3) * x) / Rational(12));
    const Rational x2 = x * x;
    EXPECT_EQ(sol.a, (Rational(4) + Rational(33) * x2 - Rational(30) * x2 * x2 + Rational(5) * x2 * x2 * x2) /
                         Rational(24));
  }
}

TEST(SolveInterior, DomainErrors) {
  EXPECT_THROW(poincare::solve_interior(2, Rational(1)), poincare::EndpointDomainError);
  EXPECT_THROW(poincare::solve_interior(2, Rational(-1)), poincare::EndpointDomainError);
  EXPECT_THROW(poincare::solve_interior(2, rat(3, 2)), std::domain_error);
  EXPECT_THROW(poincare::solve_interior(0, Rational(0)), std::invalid_argument);
  const auto small = poincare::build_table(3);
  EXPECT_THROW(poincare::solve_interior(5, Rational(0), small), std::invalid_argument);
}

TEST(SolveInterior, InvariantsOnGrid) {
  for (int m = 1; m <= 12; ++m) {
    for (const auto& x : grid_points()) {
      const auto sol = poincare::solve_interior(m, x);
      const auto dq = poincare::derivative(sol.Q);
      EXPECT_LE(sol.Q.degree(), m + 1);
      if (!x.is_zero()) EXPECT_EQ(sol.Q.degree(), m + 1);
      EXPECT_TRUE(sol.Q(x).is_zero());
      EXPECT_EQ(dq(Rational(1)), Rational(1));
      EXPECT_EQ(dq(Rational(-1)), Rational(-1));
      EXPECT_GT(sol.c, Rational(0));
      EXPECT_EQ(sol.c, Rational(2) / (x * x + Rational(1) - Rational(2) * sol.a));
      for (const auto& r : poincare::moment_residuals(sol)) EXPECT_TRUE(r.is_zero()) << "m=" << m << " x=" << x;
      EXPECT_EQ(poincare::energy_of_extremal(sol), Rational(2) / sol.c);
    }
  }
}

TEST(SolveInterior, MonotoneInMomentCount) {
  for (const auto& x : grid_points()) {
    Rational previous = poincare::solve_interior(1, x).Bsq;
    for (int m = 2; m <= 10; ++m) {
      const Rational current = poincare::solve_interior(m, x).Bsq;
      EXPECT_LE(current, previous) << "m=" << m << " x=" << x;
      previous = current;
    }
  }
}

TEST(Extremal, OneMomentPieces) {
  const auto y = poincare::extremal(poincare::solve_interior(1, Rational(0)));
  EXPECT_EQ(y.left(), (Poly{1, 3, rat(3, 2)}));
  EXPECT_EQ(y.right(), (Poly{1, -3, rat(3, 2)}));
  EXPECT_EQ(y(Rational(0)), Rational(1));
}

TEST(Extremal, TwoMomentsAtZero) {
  // (3t^2 - 6|t|)/2 + 1
  const auto y = poincare::extremal(poincare::solve_interior(2, Rational(0)));
  EXPECT_EQ(y.left(), (Poly{1, 3, rat(3, 2)}));
  EXPECT_EQ(y.right(), (Poly{1, -3, rat(3, 2)}));
}

TEST(Extremal, BoundaryAndNormalization) {
  for (int m = 1; m <= 8; ++m) {
    for (const auto& x : grid_points()) {
      const auto sol = poincare::solve_interior(m, x);
      const auto y = poincare::extremal(sol);
      EXPECT_EQ(y(x), Rational(1));
      EXPECT_EQ(y.derivative_at(Rational(-1)), Rational(0));
      EXPECT_EQ(y.derivative_at(Rational(1)), Rational(0));
      EXPECT_EQ(y.energy(), poincare::inverse(sol.Bsq));
    }
  }
}

TEST(Energy, OneMomentAtZero) {
  // integral of (t - sgn t)^2 = 2 * integral_0^1 (t - 1)^2 = 2/3
  EXPECT_EQ(poincare::energy_of_extremal(poincare::solve_interior(1, Rational(0))), rat(2, 3));
}

TEST(SolveFamily, MatchesPublishedPolynomials) {
  EXPECT_EQ(poincare::solve_family(1).Bsq_poly, (Poly{rat(1, 6), 0, rat(1, 2)}));
  EXPECT_EQ(poincare::solve_family(2).Bsq_poly,
            (Poly{rat(8, 48), 0, rat(-21, 48), 0, rat(30, 48), 0, rat(-5, 48)}));
  EXPECT_EQ(poincare::solve_family(3).Bsq_poly,
            (Poly{rat(297, 3840), 0, rat(1260, 3840), 0, rat(-5370, 3840), 0, rat(5900, 3840), 0, rat(-1575, 3840)}));
  for (int m : {1, 2, 3, 4, 6}) {
    EXPECT_EQ(poincare::solve_family(m).Bsq_poly, *poincare::published_bsq_polynomial(m)) << m;
  }
}

TEST(SolveFamily, PrintedFiveMomentPolynomialDiffersOnlyInSixthPower) {
  const auto derived = poincare::solve_family(5).Bsq_poly;
  const auto printed = poincare::printed_bsq_polynomial_m5();
  for (int i = 0; i <= 12; ++i) {
    if (i == 6) {
      EXPECT_EQ(derived.coefficient(i), -printed.coefficient(i));
    } else {
      EXPECT_EQ(derived.coefficient(i), printed.coefficient(i)) << i;
    }
  }
  EXPECT_EQ(printed(Rational(1)) * Rational(26880), Rational(-713584));
  EXPECT_EQ(derived(Rational(1)) * Rational(26880), Rational(1536));
}

TEST(SolveFamily, Invariants) {
  for (int m = 1; m <= 12; ++m) {
    const auto fam = poincare::solve_family(m);
    EXPECT_EQ(fam.Bsq_poly, (Poly{1, 0, 1} - Rational(2) * fam.a_poly) / Rational(4));
    for (int i = 1; i <= fam.Bsq_poly.degree(); i += 2) EXPECT_TRUE(fam.Bsq_poly.coefficient(i).is_zero());
    EXPECT_EQ(fam.Bsq_poly.degree(), m == 1 ? 2 : 2 * m + 2);
    EXPECT_EQ(fam.Bsq_poly(Rational(1)), poincare::endpoint_constant(m));
    EXPECT_EQ(fam.Bsq_poly(Rational(-1)), poincare::endpoint_constant(m));
    for (const auto& x : grid_points()) {
      const auto sol = poincare::solve_interior(m, x);
      EXPECT_EQ(fam.Bsq_poly(x), sol.Bsq);
      EXPECT_EQ(fam.a_poly(x), sol.a);
      EXPECT_EQ(fam.alpha_poly(x), sol.alpha);
      EXPECT_EQ(fam.beta_poly(x), sol.beta);
    }
  }
  EXPECT_THROW(poincare::solve_family(0), std::invalid_argument);
}

TEST(Endpoint, Constants) {
  EXPECT_EQ(poincare::endpoint_constant(1), rat(2, 3));
  EXPECT_EQ(poincare::endpoint_constant(2), rat(1, 4));
  EXPECT_EQ(poincare::endpoint_constant(3), rat(2, 15));
  EXPECT_EQ(poincare::endpoint_constant(4), rat(1, 12));
  EXPECT_THROW(poincare::endpoint_constant(0), std::invalid_argument);
}

TEST(Endpoint, Extremals) {
  const Poly p1 = Poly::variable();
  const Poly p2{rat(-1, 2), 0, rat(3, 2)};
  const auto y = poincare::endpoint_extremal(1, 1);
  EXPECT_EQ(y, (Rational(3) * p1 + p2) / Rational(4));
  EXPECT_EQ(poincare::derivative(y)(Rational(-1)), Rational(0));
  EXPECT_EQ(poincare::definite_integral(y, Rational(-1), Rational(1)), Rational(0));

  const Poly p3{0, rat(-3, 2), 0, rat(5, 2)};
  const auto z = poincare::endpoint_extremal(2, -1);
  EXPECT_EQ(z, poincare::reflect((Rational(4) * p2 + Rational(2) * p3) / Rational(6)));
  EXPECT_EQ(z(Rational(-1)), Rational(1));
  EXPECT_EQ(poincare::derivative(z)(Rational(1)), Rational(0));
  EXPECT_THROW(poincare::endpoint_extremal(2, 0), std::invalid_argument);

  for (int m = 1; m <= 10; ++m) {
    for (int side : {1, -1}) {
      const auto e = poincare::endpoint_extremal(m, side);
      const auto de = poincare::derivative(e);
      EXPECT_EQ(e(Rational(side)), Rational(1));
      EXPECT_EQ(de(Rational(-side)), Rational(0));
      for (int k = 0; k < m; ++k) {
        EXPECT_TRUE(poincare::definite_integral(Poly::monomial(k) * e, Rational(-1), Rational(1)).is_zero());
      }
      EXPECT_EQ(poincare::definite_integral(de * de, Rational(-1), Rational(1)),
                poincare::inverse(poincare::endpoint_constant(m)));
    }
  }
}

TEST(ZeroClosedForm, Values) {
  EXPECT_EQ(poincare::bsq_zero_closed(2), rat(275, 5376));
  EXPECT_EQ(poincare::bsq_zero_closed(3), rat(45325, 1179648));
  EXPECT_THROW(poincare::bsq_zero_closed(1), std::invalid_argument);
  for (int n = 2; n <= 6; ++n) {
    EXPECT_EQ(poincare::bsq_zero_closed(n), poincare::solve_interior(2 * n + 1, Rational(0)).Bsq) << n;
    EXPECT_EQ(poincare::bsq_zero_closed(n), poincare::solve_interior(2 * n + 2, Rational(0)).Bsq) << n;
  }
}

TEST(Verification, FullSuitePasses) {
  const auto report = poincare::run_verification(8);
  for (const auto& c : report.checks) EXPECT_TRUE(c.passed) << c.name << ": " << c.counterexample;
  ASSERT_EQ(report.notes.size(), 1u);
  EXPECT_NE(report.notes.front().find("-713584"), std::string::npos);
}
