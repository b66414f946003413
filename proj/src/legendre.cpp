#include "poincare/legendre.hpp"

#include <mutex>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>

namespace poincare {

namespace {

void require_degree(const LegendreTable& table, int k, int lowest) {
  if (k < lowest || k > table.max_degree) {
    throw std::out_of_range("Legendre table index " + std::to_string(k) + " outside [" + std::to_string(lowest) +
                            ", " + std::to_string(table.max_degree) + "]");
  }
}

// (t^2 - 1)^k expanded by the binomial theorem.
RationalPolynomial rodrigues_kernel(int k) {
  std::vector<Rational> coeffs(static_cast<std::size_t>(2 * k) + 1, Rational(0));
  for (int j = 0; j <= k; ++j) {
    BigInt c = binomial(static_cast<unsigned>(k), static_cast<unsigned>(j));
    if ((k - j) % 2 != 0) c = -c;
    coeffs[static_cast<std::size_t>(2 * j)] = Rational(c);
  }
  return RationalPolynomial(std::move(coeffs));
}

Rational rodrigues_scale(int k) {
  BigInt two_pow;
  mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>(k));
  return Rational(BigInt(1), BigInt(two_pow * factorial(static_cast<unsigned>(k))));
}

RationalPolynomial companion_rodrigues(int k) {
  return derivative(rodrigues_kernel(k), k - 2) * rodrigues_scale(k);
}

Rational sign_power(int k) { return k % 2 == 0 ? Rational(1) : Rational(-1); }

Rational double_factorial_ratio(int num, int den) {
  return Rational(double_factorial(num), double_factorial(den));
}

// Closed form of P_k(0).
Rational legendre_at_zero(int k) {
  if (k % 2 != 0) return 0;
  if (k == 0) return 1;
  const int n = k / 2;
  return sign_power(n) * double_factorial_ratio(2 * n - 1, 2 * n);
}

// Closed form of p_k(0), k >= 2.
Rational companion_at_zero(int k) {
  if (k % 2 != 0) return 0;
  if (k == 2) return rat(1, 8);
  const int n = k / 2;
  return sign_power(n - 1) * double_factorial_ratio(2 * n - 3, 2 * n + 2);
}

// Deterministic sample of rationals strictly inside (-1, 1).
std::vector<Rational> sample_interior_points(std::size_t count, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<long> den_dist(2, 997);
  std::vector<Rational> out;
  out.reserve(count);
  while (out.size() < count) {
    const long den = den_dist(rng);
    std::uniform_int_distribution<long> num_dist(-(den - 1), den - 1);
    out.push_back(rat(num_dist(rng), den));
  }
  return out;
}

class CheckBuilder {
 public:
  explicit CheckBuilder(std::string name) { result_.name = std::move(name); }

  template <class Describe>
  void expect(bool ok, Describe&& describe) {
    if (!ok && result_.passed) {
      result_.passed = false;
      result_.counterexample = describe();
    }
  }

  CheckResult done() && { return std::move(result_); }

 private:
  CheckResult result_;
};

std::string mismatch(const std::string& what, const Rational& got, const Rational& want) {
  std::ostringstream os;
  os << what << ": got " << got << ", expected " << want;
  return os.str();
}

}  // namespace

const RationalPolynomial& LegendreTable::legendre(int k) const {
  require_degree(*this, k, 0);
  return P[static_cast<std::size_t>(k)];
}

const RationalPolynomial& LegendreTable::companion(int k) const {
  require_degree(*this, k, 2);
  return p_low[static_cast<std::size_t>(k)];
}

const RationalPolynomial& LegendreTable::gamma_coefficient(int k) const {
  require_degree(*this, k, 0);
  return gamma[static_cast<std::size_t>(k)];
}

LegendreTable build_table(int max_degree) {
  if (max_degree < 2) {
    throw std::invalid_argument("build_table: max_degree must be at least 2");
  }
  LegendreTable table;
  table.max_degree = max_degree;
  const auto count = static_cast<std::size_t>(max_degree) + 1;
  table.P.reserve(count);
  table.p_low.resize(count);
  table.gamma.reserve(count);

  const auto t = RationalPolynomial::variable();
  table.P.push_back(RationalPolynomial::constant(1));
  table.P.push_back(t);
  for (int k = 1; k < max_degree; ++k) {
    // (k+1) P_{k+1} = (2k+1) t P_k - k P_{k-1}
    auto next = Rational(2 * k + 1) * (t * table.P[k]) - Rational(k) * table.P[k - 1];
    table.P.push_back(next / Rational(k + 1));
  }

  for (int k = 2; k <= max_degree; ++k) {
    table.p_low[static_cast<std::size_t>(k)] = companion_rodrigues(k);
  }

  table.gamma.push_back(RationalPolynomial{rat(1, 2), 0, rat(1, 2)});
  table.gamma.push_back(RationalPolynomial{0, rat(-3, 2), 0, rat(1, 2)});
  for (int k = 2; k <= max_degree; ++k) {
    table.gamma.push_back(Rational(2 * k + 1) * table.p_low[static_cast<std::size_t>(k)]);
  }
  return table;
}

RationalPolynomial legendre_rodrigues(int k) {
  if (k < 0) throw std::invalid_argument("legendre_rodrigues: negative degree");
  return derivative(rodrigues_kernel(k), k) * rodrigues_scale(k);
}

Rational legendre_leading_coefficient(int k) {
  const BigInt kf = factorial(static_cast<unsigned>(k));
  BigInt two_pow;
  mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>(k));
  return Rational(factorial(static_cast<unsigned>(2 * k)), BigInt(two_pow * kf * kf));
}

std::shared_ptr<const LegendreTable> shared_table(int min_degree) {
  static std::mutex mutex;
  static std::shared_ptr<const LegendreTable> cache;
  const std::lock_guard lock(mutex);
  if (!cache || cache->max_degree < min_degree) {
    // Grow geometrically so a sweep over m does not rebuild every step.
    int degree = std::max(min_degree, 2);
    if (cache) degree = std::max(degree, 2 * cache->max_degree);
    cache = std::make_shared<const LegendreTable>(build_table(degree));
  }
  return cache;
}

Report check_identities(const LegendreTable& table) {
  Report report;
  const int kmax = table.max_degree;
  const Rational one(1);
  const Rational minus_one(-1);
  const auto at = [](int k) { return static_cast<std::size_t>(k); };

  {
    CheckBuilder c("legendre.shape");
    for (int k = 0; k <= kmax; ++k) {
      const auto& p = table.P[at(k)];
      c.expect(p.degree() == k, [&] { return "deg P_" + std::to_string(k) + " = " + std::to_string(p.degree()); });
      c.expect(p.leading_coefficient() == legendre_leading_coefficient(k), [&] {
        return mismatch("leading coefficient of P_" + std::to_string(k), p.leading_coefficient(),
                        legendre_leading_coefficient(k));
      });
      if (k >= 2) {
        c.expect(table.p_low[at(k)].degree() == k + 2, [&] { return "deg p_" + std::to_string(k) + " != k+2"; });
      }
    }
    report.checks.push_back(std::move(c).done());
  }
  {
    CheckBuilder c("legendre.rodrigues_matches_recurrence");
    for (int k = 0; k <= kmax; ++k) {
      c.expect(table.P[at(k)] == legendre_rodrigues(k), [&] { return "P_" + std::to_string(k) + " differs"; });
    }
    report.checks.push_back(std::move(c).done());
  }
  {
    CheckBuilder c("legendre.companion_second_derivative");
    for (int k = 2; k <= kmax; ++k) {
      c.expect(derivative(table.p_low[at(k)], 2) == table.P[at(k)],
               [&] { return "p_" + std::to_string(k) + "'' != P_" + std::to_string(k); });
    }
    report.checks.push_back(std::move(c).done());
  }
  {
    CheckBuilder c("legendre.value_at_zero");
    for (int k = 0; k <= kmax; ++k) {
      const Rational got = table.P[at(k)](0);
      c.expect(got == legendre_at_zero(k), [&] { return mismatch("P_" + std::to_string(k) + "(0)", got, legendre_at_zero(k)); });
    }
    report.checks.push_back(std::move(c).done());
  }
  {
    CheckBuilder c("legendre.companion_at_zero");
    for (int k = 2; k <= kmax; ++k) {
      const Rational got = table.p_low[at(k)](0);
      c.expect(got == companion_at_zero(k),
               [&] { return mismatch("p_" + std::to_string(k) + "(0)", got, companion_at_zero(k)); });
    }
    report.checks.push_back(std::move(c).done());
  }
  {
    CheckBuilder c("legendre.endpoint_values");
    for (int k = 0; k <= kmax; ++k) {
      const auto& p = table.P[at(k)];
      c.expect(p(one) == one, [&] { return mismatch("P_" + std::to_string(k) + "(1)", p(one), one); });
      c.expect(p(minus_one) == sign_power(k),
               [&] { return mismatch("P_" + std::to_string(k) + "(-1)", p(minus_one), sign_power(k)); });
    }
    report.checks.push_back(std::move(c).done());
  }
  {
    CheckBuilder c("legendre.endpoint_derivatives");
    for (int k = 0; k <= kmax; ++k) {
      const auto dp = derivative(table.P[at(k)]);
      const Rational half_kk1 = rat(static_cast<long>(k) * (k + 1), 2);
      c.expect(dp(one) == half_kk1, [&] { return mismatch("P'_" + std::to_string(k) + "(1)", dp(one), half_kk1); });
      const Rational left = -sign_power(k) * half_kk1;
      c.expect(dp(minus_one) == left,
               [&] { return mismatch("P'_" + std::to_string(k) + "(-1)", dp(minus_one), left); });
    }
    report.checks.push_back(std::move(c).done());
  }
  {
    CheckBuilder c("legendre.orthogonality");
    for (int j = 0; j <= kmax; ++j) {
      for (int k = j; k <= kmax; ++k) {
        const Rational got = definite_integral(table.P[at(j)] * table.P[at(k)], minus_one, one);
        const Rational want = j == k ? rat(2, 2 * k + 1) : Rational(0);
        c.expect(got == want, [&] {
          return mismatch("<P_" + std::to_string(j) + ", P_" + std::to_string(k) + ">", got, want);
        });
      }
    }
    report.checks.push_back(std::move(c).done());
  }
  {
    CheckBuilder c("legendre.derivative_norms");
    for (int k = 0; k <= kmax; ++k) {
      const auto dp = derivative(table.P[at(k)]);
      const Rational got = definite_integral(dp * dp, minus_one, one);
      const Rational want(static_cast<long>(k) * (k + 1));
      c.expect(got == want, [&] { return mismatch("|P'_" + std::to_string(k) + "|^2", got, want); });
    }
    for (int k = 0; k < kmax; ++k) {
      const Rational got =
          definite_integral(derivative(table.P[at(k)]) * derivative(table.P[at(k + 1)]), minus_one, one);
      c.expect(got.is_zero(), [&] {
        return mismatch("<P'_" + std::to_string(k) + ", P'_" + std::to_string(k + 1) + ">", got, 0);
      });
    }
    report.checks.push_back(std::move(c).done());
  }

  const auto points = sample_interior_points(10, 20131014U);
  {
    CheckBuilder c("legendre.abs_kernel_moments");
    for (int k = 0; k <= kmax; ++k) {
      for (const auto& x : points) {
        const Rational got = abs_kernel_integral(table.P[at(k)], x);
        Rational want;
        if (k == 0) {
          want = x * x + one;
        } else if (k == 1) {
          want = x * x * x / Rational(3) - x;
        } else {
          want = Rational(2) * table.p_low[at(k)](x);
        }
        c.expect(got == want, [&] {
          return mismatch("int P_" + std::to_string(k) + "|t-x| at x=" + x.str(), got, want);
        });
      }
    }
    report.checks.push_back(std::move(c).done());
  }
  {
    CheckBuilder c("legendre.gamma_quotient");
    for (int k = 0; k <= kmax; ++k) {
      for (const auto& x : points) {
        const Rational want = abs_kernel_integral(table.P[at(k)], x) * rat(2 * k + 1, 2);
        const Rational got = table.gamma[at(k)](x);
        c.expect(got == want,
                 [&] { return mismatch("Gamma_" + std::to_string(k) + "(" + x.str() + ")", got, want); });
      }
    }
    report.checks.push_back(std::move(c).done());
  }
  return report;
}

}  // namespace poincare
