#ifndef POINCARE_ORACLE_HPP
#define POINCARE_ORACLE_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace poincare::oracle {

/// Brute-force estimate of min integral of y'^2 subject to vanishing moments
/// k = 0..m-1 and y(x) = 1, over continuous piecewise-linear y.
struct OracleResult {
  int m = 0;
  double x = 0.0;
  /// Requested uniform node count.
  int nodes = 0;
  /// Points actually used: `nodes`, plus one if x had to be inserted.
  int grid_size = 0;
  double energy = 0.0;
  double b_estimate = 0.0;
  /// m moment residuals followed by the point-value residual.
  std::vector<double> constraint_residuals;
  /// max |pivot| / min |pivot| of the LU factorization.
  double condition_hint = 0.0;

  double max_residual() const;
};

class NumericalFailure : public std::runtime_error {
 public:
  NumericalFailure(const std::string& what, double condition_hint)
      : std::runtime_error(what), condition_hint_(condition_hint) {}
  double condition_hint() const { return condition_hint_; }

 private:
  double condition_hint_;
};

/// Uniform grid of `nodes` points on [-1, 1] with x inserted unless a node
/// already lies within 1e-12 of it. Symmetric under t -> -t when x = 0.
std::vector<double> build_grid(double x, int nodes);

/// Throws std::invalid_argument on bad (m, x, nodes) and NumericalFailure if
/// the saddle-point system is singular.
OracleResult fem_solve(int m, double x, int nodes);

struct ConvergenceRow {
  int nodes = 0;
  double energy = 0.0;
  double b_estimate = 0.0;
};

struct ConvergenceStudy {
  std::vector<ConvergenceRow> rows;
  /// Observed orders of (energy - exact) between consecutive rows; empty
  /// unless an exact energy was supplied and there are at least two rows.
  std::vector<double> orders;

  bool energies_non_increasing() const;
  double min_order() const;
};

/// Throws std::invalid_argument unless node_counts is strictly increasing
/// with every entry >= m + 3.
ConvergenceStudy convergence_rates(int m, double x, const std::vector<int>& node_counts,
                                   std::optional<double> exact_energy = std::nullopt);

}  // namespace poincare::oracle

#endif  // POINCARE_ORACLE_HPP
