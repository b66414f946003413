#ifndef POINCARE_VERIFY_HPP
#define POINCARE_VERIFY_HPP

#include <optional>
#include <vector>

#include "poincare/legendre.hpp"
#include "poincare/report.hpp"

namespace poincare {

/// Published closed forms of B_m(x)^2 as polynomials in x, for the m where
/// they are known to be correct (1, 2, 3, 4, 6).
std::optional<RationalPolynomial> published_bsq_polynomial(int m);

/// The m = 5 polynomial exactly as printed in the literature. It disagrees
/// with the construction in the sign of the x^6 term and fails the endpoint
/// identity; verify reports this as a note.
RationalPolynomial printed_bsq_polynomial_m5();

/// Interior sample points used by the invariant suite.
std::vector<Rational> verification_points();

/// Full exact invariant suite for m = 1..max_m, all derived from `table`.
/// Throws std::invalid_argument if max_m < 1 or the table is too small.
Report run_verification(int max_m, const LegendreTable& table);

/// Same, on a freshly built table of degree max(12, max_m + 1).
Report run_verification(int max_m);

}  // namespace poincare

#endif  // POINCARE_VERIFY_HPP
