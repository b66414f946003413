#include "poincare/verify.hpp"

#include <algorithm>
#include <sstream>
#include <string>

#include "poincare/sharp.hpp"

namespace poincare {

namespace {

RationalPolynomial even_polynomial(std::initializer_list<long> even_coeffs, long denominator) {
  std::vector<Rational> coeffs;
  for (long c : even_coeffs) {
    coeffs.push_back(rat(c, denominator));
    coeffs.emplace_back(0);
  }
  return RationalPolynomial(std::move(coeffs));
}

std::string format_poly(const RationalPolynomial& p) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < p.coefficients().size(); ++i) {
    if (i > 0) os << ", ";
    os << p.coefficients()[i];
  }
  os << "]";
  return os.str();
}

std::string at_case(int m, const Rational& x) { return "m=" + std::to_string(m) + " x=" + x.str(); }

class Check {
 public:
  explicit Check(std::string name) { result_.name = std::move(name); }

  void expect(bool ok, const std::string& detail) {
    if (!ok && result_.passed) {
      result_.passed = false;
      result_.counterexample = detail;
    }
  }

  CheckResult done() && { return std::move(result_); }

 private:
  CheckResult result_;
};

}  // namespace

std::optional<RationalPolynomial> published_bsq_polynomial(int m) {
  switch (m) {
    case 1:
      return even_polynomial({1, 3}, 6);
    case 2:
      return even_polynomial({8, -21, 30, -5}, 48);
    case 3:
      return even_polynomial({297, 1260, -5370, 5900, -1575}, 3840);
    case 4:
      return even_polynomial({297, -1440, 9030, -20860, 18585, -5292}, 3840);
    case 6:
      return even_polynomial({2200, -15225, 211050, -1162455, 3017700, -3977127, 2562714, -637065}, 43008);
    default:
      return std::nullopt;
  }
}

RationalPolynomial printed_bsq_polynomial_m5() {
  return even_polynomial({1375, 8400, -95025, -357560, -597555, 448056, -121275}, 26880);
}

std::vector<Rational> verification_points() {
  return {rat(0, 1), rat(1, 4), rat(-1, 4), rat(1, 2), rat(-1, 2), rat(3, 4), rat(-3, 4), rat(9, 10), rat(-9, 10)};
}

Report run_verification(int max_m, const LegendreTable& table) {
  if (max_m < 1) throw std::invalid_argument("verify: max_m must be at least 1");
  if (table.max_degree < max_m + 1) throw std::invalid_argument("verify: Legendre table too small");

  Report report = check_identities(table);
  const auto points = verification_points();
  const Rational one(1);
  const Rational minus_one(-1);

  std::vector<SharpFamily> families;
  for (int m = 1; m <= max_m; ++m) families.push_back(solve_family(m, table));

  Check known("sharp.known_constants");
  Check conditions("sharp.boundary_conditions");
  Check moments("sharp.moment_residuals");
  Check lemma("sharp.energy_identity");
  Check consistency("sharp.family_matches_pointwise");
  Check monotone("sharp.monotone_in_m");
  for (int m = 1; m <= max_m; ++m) {
    for (const auto& x : points) {
      const SharpSolution sol = solve_interior(m, x, table);
      const auto dq = derivative(sol.Q);
      const std::string where = at_case(m, x);
      // beta vanishes at x = 0 for even m, so only an upper bound holds.
      conditions.expect(sol.Q.degree() <= m + 1, where + ": deg Q = " + std::to_string(sol.Q.degree()));
      conditions.expect(sol.Q(x).is_zero(), where + ": Q(x) = " + sol.Q(x).str());
      conditions.expect(dq(one) == one, where + ": Q'(1) = " + dq(one).str());
      conditions.expect(dq(minus_one) == minus_one, where + ": Q'(-1) = " + dq(minus_one).str());
      conditions.expect(sol.c.sign() > 0, where + ": c = " + sol.c.str());
      conditions.expect(sol.Bsq * Rational(2) * sol.c == one, where + ": Bsq != 1/(2c)");

      const auto residuals = moment_residuals(sol);
      for (std::size_t k = 0; k < residuals.size(); ++k) {
        moments.expect(residuals[k].is_zero(), where + ": moment " + std::to_string(k) + " = " + residuals[k].str());
      }
      const auto y = extremal(sol);
      moments.expect(y(x) == one, where + ": y(x) = " + y(x).str());

      const Rational energy = energy_of_extremal(sol);
      lemma.expect(energy == Rational(2) / sol.c, where + ": energy " + energy.str() + " vs 2/c");
      lemma.expect(y.energy() == inverse(sol.Bsq), where + ": extremal energy != 1/Bsq");

      const Rational from_family = families[static_cast<std::size_t>(m - 1)].Bsq_poly(x);
      consistency.expect(from_family == sol.Bsq, where + ": family " + from_family.str() + " vs " + sol.Bsq.str());
      if (m > 1) {
        const Rational previous = solve_interior(m - 1, x, table).Bsq;
        monotone.expect(sol.Bsq <= previous, where + ": Bsq increased from m-1");
      }
      if (m == 1) {
        const Rational want = (one + Rational(3) * x * x) / Rational(6);
        known.expect(sol.Bsq == want, where + ": Bsq " + sol.Bsq.str() + " vs " + want.str());
      }
    }
  }
  if (max_m >= 2) {
    const Rational b2 = solve_interior(2, 0, table).Bsq;
    known.expect(b2 == rat(1, 6), "m=2 x=0: Bsq " + b2.str() + " vs 1/6");
  }
  for (auto* c : {&known, &conditions, &moments, &lemma, &consistency, &monotone}) {
    report.checks.push_back(std::move(*c).done());
  }

  Check endpoint("sharp.endpoint_limit");
  Check parity("sharp.parity");
  Check degree("sharp.family_degree");
  Check published("sharp.published_polynomials");
  for (const auto& fam : families) {
    const int m = fam.m;
    const Rational want = endpoint_constant(m);
    const std::string where = "m=" + std::to_string(m);
    endpoint.expect(fam.Bsq_poly(one) == want, where + ": Bsq(1) = " + fam.Bsq_poly(one).str());
    endpoint.expect(fam.Bsq_poly(minus_one) == want, where + ": Bsq(-1) = " + fam.Bsq_poly(minus_one).str());
    for (int i = 1; i <= fam.Bsq_poly.degree(); i += 2) {
      parity.expect(fam.Bsq_poly.coefficient(i).is_zero(), where + ": odd coefficient " + std::to_string(i));
    }
    const int want_degree = m == 1 ? 2 : 2 * m + 2;
    degree.expect(fam.Bsq_poly.degree() == want_degree, where + ": degree " + std::to_string(fam.Bsq_poly.degree()));
    degree.expect(fam.Bsq_poly == (RationalPolynomial{1, 0, 1} - Rational(2) * fam.a_poly) / Rational(4),
                  where + ": Bsq_poly != (x^2+1-2a)/4");
    if (const auto ref = published_bsq_polynomial(m)) {
      published.expect(fam.Bsq_poly == *ref, where + ": derived " + format_poly(fam.Bsq_poly) + " vs published " +
                                                 format_poly(*ref));
    }
    if (m == 5) {
      const auto printed = printed_bsq_polynomial_m5();
      if (printed != fam.Bsq_poly) {
        std::ostringstream note;
        note << "printed m=5 polynomial disagrees with the construction: derived x^6 coefficient "
             << fam.Bsq_poly.coefficient(6) << ", printed " << printed.coefficient(6) << "; printed value at x=1 is "
             << printed(one) << " (numerator sum " << printed(one) * Rational(26880) << "), endpoint limit requires "
             << want << " (numerator sum " << want * Rational(26880) << ")";
        report.notes.push_back(note.str());
      }
    }
  }
  for (auto* c : {&endpoint, &parity, &degree, &published}) report.checks.push_back(std::move(*c).done());

  Check ends("sharp.endpoint_extremal");
  for (int m = 1; m <= max_m; ++m) {
    for (int side : {1, -1}) {
      const auto y = endpoint_extremal(m, side, table);
      const auto dy = derivative(y);
      const std::string where = "m=" + std::to_string(m) + " side=" + std::to_string(side);
      ends.expect(y(Rational(side)) == one, where + ": value at side != 1");
      ends.expect(dy(Rational(-side)).is_zero(), where + ": slope at opposite endpoint != 0");
      for (int k = 0; k < m; ++k) {
        const Rational mom = definite_integral(RationalPolynomial::monomial(k) * y, minus_one, one);
        ends.expect(mom.is_zero(), where + ": moment " + std::to_string(k) + " = " + mom.str());
      }
      const Rational energy = definite_integral(dy * dy, minus_one, one);
      ends.expect(energy == inverse(endpoint_constant(m)), where + ": energy " + energy.str());
    }
  }
  report.checks.push_back(std::move(ends).done());

  Check closed("sharp.zero_closed_form");
  closed.expect(bsq_zero_closed(2) == rat(275, 5376), "n=2: " + bsq_zero_closed(2).str());
  closed.expect(bsq_zero_closed(3) == rat(45325, 1179648), "n=3: " + bsq_zero_closed(3).str());
  for (int n = 2; 2 * n + 2 <= max_m; ++n) {
    const Rational want = bsq_zero_closed(n);
    for (int m : {2 * n + 1, 2 * n + 2}) {
      const Rational got = solve_interior(m, 0, table).Bsq;
      closed.expect(got == want, "m=" + std::to_string(m) + ": " + got.str() + " vs closed " + want.str());
    }
  }
  if (max_m >= 4) {
    for (int m : {3, 4}) {
      const Rational got = solve_interior(m, 0, table).Bsq;
      closed.expect(got == rat(99, 1280), "m=" + std::to_string(m) + " x=0: " + got.str() + " vs 99/1280");
    }
  }
  report.checks.push_back(std::move(closed).done());
  return report;
}

Report run_verification(int max_m) {
  if (max_m < 1) throw std::invalid_argument("verify: max_m must be at least 1");
  return run_verification(max_m, build_table(std::max(12, max_m + 1)));
}

}  // namespace poincare
