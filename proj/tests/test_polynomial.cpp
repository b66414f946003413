#include <random>

#include <gtest/gtest.h>

#include "poincare/kink_function.hpp"
#include "poincare/polynomial.hpp"

using poincare::KinkFunction;
using poincare::rat;
using poincare::Rational;
using Poly = poincare::RationalPolynomial;

namespace {

// Hand-written Legendre polynomials; the table is tested elsewhere.
const Poly kP2{rat(-1, 2), 0, rat(3, 2)};
const Poly kP3{0, rat(-3, 2), 0, rat(5, 2)};

Poly random_poly(std::mt19937& rng, int max_degree) {
  std::uniform_int_distribution<int> deg(-1, max_degree);
  std::uniform_int_distribution<long> num(-50, 50);
  std::uniform_int_distribution<long> den(1, 12);
  std::vector<Rational> c;
  const int d = deg(rng);
  for (int i = 0; i <= d; ++i) c.push_back(rat(num(rng), den(rng)));
  return Poly(std::move(c));
}

}  // namespace

TEST(Polynomial, CanonicalForm) {
  EXPECT_TRUE(Poly{}.is_zero());
  EXPECT_EQ(Poly{}.degree(), -1);
  EXPECT_EQ((Poly{1, 2, 0, 0}).degree(), 1);
  EXPECT_EQ((Poly{0, 0}), Poly{});
  const Poly p{1, 1};
  EXPECT_EQ(p - p, Poly{});
  EXPECT_EQ((p - p).coefficients().size(), 0u);
}

TEST(Polynomial, Evaluation) {
  EXPECT_EQ(Poly{}(rat(3, 7)), Rational(0));
  EXPECT_EQ(kP2(0), rat(-1, 2));
  EXPECT_EQ(kP2(1), Rational(1));
  EXPECT_EQ((Poly{1, -2, 3})(rat(1, 2)), rat(3, 4));
}

TEST(Polynomial, Calculus) {
  EXPECT_EQ(poincare::derivative(Poly::monomial(3)), Poly::monomial(2, 3));
  EXPECT_EQ(poincare::antiderivative(Poly::monomial(2, 3)), Poly::monomial(3));
  EXPECT_EQ(poincare::derivative(Poly::constant(5)), Poly{});
  EXPECT_EQ(poincare::derivative(Poly::monomial(2), 5), Poly{});
  EXPECT_THROW(poincare::derivative(kP2, -1), std::invalid_argument);

  // p_2 = (t^2 - 1)^2 / 8, differentiated twice by hand: (12 t^2 - 4) / 8.
  const Poly p2 = poincare::pow(Poly{-1, 0, 1}, 2) / Rational(8);
  EXPECT_EQ(poincare::derivative(p2, 2), kP2);
}

TEST(Polynomial, DefiniteIntegrals) {
  EXPECT_EQ(poincare::definite_integral(kP2 * kP2, Rational(-1), Rational(1)), rat(2, 5));
  const Poly dp3 = poincare::derivative(kP3);
  EXPECT_EQ(poincare::definite_integral(dp3 * dp3, Rational(-1), Rational(1)), Rational(12));
  EXPECT_EQ(poincare::definite_integral(poincare::derivative(kP2) * dp3, Rational(-1), Rational(1)), Rational(0));
}

TEST(Polynomial, AbsKernelIntegral) {
  EXPECT_EQ(poincare::abs_kernel_integral(Poly::constant(1), rat(1, 2)), rat(5, 4));
  EXPECT_EQ(poincare::abs_kernel_integral(Poly::variable(), rat(1, 2)), rat(-11, 24));
  for (const Rational& x : {rat(0, 1), rat(1, 3), rat(-5, 7), rat(99, 100), Rational(1), Rational(-1)}) {
    const Rational want = poincare::pow(x * x - Rational(1), 2) / Rational(4);
    EXPECT_EQ(poincare::abs_kernel_integral(kP2, x), want) << x;
  }
  EXPECT_THROW(poincare::abs_kernel_integral(kP2, rat(3, 2)), std::domain_error);
}

TEST(Polynomial, RingAxiomsOnFuzzedInputs) {
  std::mt19937 rng(11);
  for (int i = 0; i < 200; ++i) {
    const Poly a = random_poly(rng, 6);
    const Poly b = random_poly(rng, 6);
    const Poly c = random_poly(rng, 6);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * b, b * a);
    if (!a.is_zero() && !b.is_zero()) EXPECT_EQ((a * b).degree(), a.degree() + b.degree());
  }
}

TEST(Polynomial, CalculusProperties) {
  std::mt19937 rng(13);
  std::uniform_int_distribution<long> num(-20, 20);
  for (int i = 0; i < 200; ++i) {
    const Poly p = random_poly(rng, 8);
    EXPECT_EQ(poincare::derivative(poincare::antiderivative(p)), p);
    const Rational a = rat(num(rng), 7);
    const Rational b = rat(num(rng), 5);
    const Poly F = poincare::antiderivative(p);
    EXPECT_EQ(poincare::definite_integral(p, a, b), F(b) - F(a));
    EXPECT_EQ(poincare::compose(p, Poly{0, -1}), poincare::reflect(p));
  }
}

TEST(Polynomial, CastToDouble) {
  const auto pd = kP3.cast<double>();
  EXPECT_DOUBLE_EQ(pd(0.5), kP3(rat(1, 2)).to_double());
  EXPECT_EQ(pd.degree(), 3);
}

TEST(KinkFunction, FromAbsPieces) {
  // 1 + 2|t - 1/2|
  const auto f = KinkFunction<Rational>::from_abs(rat(1, 2), Poly::constant(1), Rational(2));
  EXPECT_EQ(f.left(), (Poly{2, -2}));
  EXPECT_EQ(f.right(), (Poly{0, 2}));
  EXPECT_EQ(f.left()(f.kink()), f.right()(f.kink()));
  EXPECT_EQ(f(Rational(-1)), Rational(4));
  EXPECT_EQ(f(Rational(1)), Rational(2));
  EXPECT_EQ(f.derivative_at(Rational(0)), Rational(-2));
  EXPECT_EQ(f.derivative_at(Rational(1)), Rational(2));
  // Energy of 2|t - 1/2| is 4 * 2.
  EXPECT_EQ(f.energy(), Rational(8));
  // Zeroth moment: area under 1 + 2|t - 1/2| on [-1, 1] = 2 + (9/4 + 1/4).
  EXPECT_EQ(f.moment(0), rat(9, 2));
}

TEST(KinkFunction, RejectsDiscontinuousPieces) {
  EXPECT_THROW(KinkFunction<Rational>(Rational(0), Poly{1}, Poly{2}), std::invalid_argument);
}

TEST(KinkFunction, ContinuityHoldsAfterEveryConstruction) {
  std::mt19937 rng(17);
  std::uniform_int_distribution<long> num(-99, 99);
  for (int i = 0; i < 100; ++i) {
    const Rational kink = rat(num(rng), 100);
    const Poly base = random_poly(rng, 5);
    const Rational slope = rat(num(rng), 7);
    const auto f = KinkFunction<Rational>::from_abs(kink, base, slope);
    EXPECT_EQ(f.left()(kink), f.right()(kink));
    EXPECT_EQ(f(kink), base(kink));
  }
}
