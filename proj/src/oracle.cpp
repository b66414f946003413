#include "poincare/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Dense>

namespace poincare::oracle {

namespace {

constexpr double kSnapTolerance = 1e-12;
constexpr double kMaxConditionHint = 1e14;

// Integrals of t^k against the two local hat pieces on [a, a + h], written in
// the shifted variable t = a + h s so that small h does not cancel.
struct ElementMoments {
  double left = 0.0;   // against (1 - s)
  double right = 0.0;  // against s
};

ElementMoments element_moments(int k, double a, double h) {
  ElementMoments out;
  double binom = 1.0;
  double h_pow = 1.0;
  for (int j = 0; j <= k; ++j) {
    const double term = binom * std::pow(a, k - j) * h_pow;
    out.left += term / ((j + 1.0) * (j + 2.0));
    out.right += term / (j + 2.0);
    binom = binom * (k - j) / (j + 1.0);
    h_pow *= h;
  }
  out.left *= h;
  out.right *= h;
  return out;
}

}  // namespace

double OracleResult::max_residual() const {
  double out = 0.0;
  for (double r : constraint_residuals) out = std::max(out, std::abs(r));
  return out;
}

std::vector<double> build_grid(double x, int nodes) {
  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(nodes) + 1);
  const double span = nodes - 1;
  for (int i = 0; i < nodes; ++i) {
    grid.push_back((2.0 * i - span) / span);
  }
  const auto nearest = std::min_element(grid.begin(), grid.end(),
                                        [x](double p, double q) { return std::abs(p - x) < std::abs(q - x); });
  if (std::abs(*nearest - x) <= kSnapTolerance) {
    *nearest = x;
  } else {
    grid.insert(std::upper_bound(grid.begin(), grid.end(), x), x);
  }
  return grid;
}

OracleResult fem_solve(int m, double x, int nodes) {
  if (m < 1) throw std::invalid_argument("oracle: m must be at least 1");
  if (!(x > -1.0 && x < 1.0)) throw std::invalid_argument("oracle: x must lie strictly inside (-1, 1)");
  if (nodes < m + 3) throw std::invalid_argument("oracle: need at least m + 3 nodes");

  const std::vector<double> grid = build_grid(x, nodes);
  const auto n = static_cast<Eigen::Index>(grid.size());
  const Eigen::Index constraints = m + 1;
  const auto kink = static_cast<Eigen::Index>(std::find(grid.begin(), grid.end(), x) - grid.begin());

  Eigen::MatrixXd stiffness = Eigen::MatrixXd::Zero(n, n);
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(constraints, n);
  for (Eigen::Index e = 0; e + 1 < n; ++e) {
    const double a = grid[static_cast<std::size_t>(e)];
    const double h = grid[static_cast<std::size_t>(e + 1)] - a;
    const double s = 1.0 / h;
    stiffness(e, e) += s;
    stiffness(e + 1, e + 1) += s;
    stiffness(e, e + 1) -= s;
    stiffness(e + 1, e) -= s;
    for (int k = 0; k < m; ++k) {
      const ElementMoments mom = element_moments(k, a, h);
      A(k, e) += mom.left;
      A(k, e + 1) += mom.right;
    }
  }
  A(m, kink) = 1.0;
  Eigen::VectorXd rhs_constraints = Eigen::VectorXd::Zero(constraints);
  rhs_constraints(m) = 1.0;

  // Stationarity of y^T K y subject to A y = b.
  const Eigen::Index size = n + constraints;
  Eigen::MatrixXd kkt = Eigen::MatrixXd::Zero(size, size);
  kkt.topLeftCorner(n, n) = 2.0 * stiffness;
  kkt.topRightCorner(n, constraints) = A.transpose();
  kkt.bottomLeftCorner(constraints, n) = A;
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(size);
  rhs.tail(constraints) = rhs_constraints;

  const Eigen::PartialPivLU<Eigen::MatrixXd> lu(kkt);
  const Eigen::VectorXd pivots = lu.matrixLU().diagonal().cwiseAbs();
  const double min_pivot = pivots.minCoeff();
  const double hint = min_pivot > 0.0 ? pivots.maxCoeff() / min_pivot : std::numeric_limits<double>::infinity();
  if (!(hint < kMaxConditionHint)) {
    throw NumericalFailure("oracle: singular KKT system", hint);
  }

  const Eigen::VectorXd solution = lu.solve(rhs);
  const Eigen::VectorXd y = solution.head(n);
  const Eigen::VectorXd residual = A * y - rhs_constraints;

  OracleResult result;
  result.m = m;
  result.x = x;
  result.nodes = nodes;
  result.grid_size = static_cast<int>(n);
  result.energy = y.dot(stiffness * y);
  result.b_estimate = 1.0 / std::sqrt(result.energy);
  result.constraint_residuals.assign(residual.data(), residual.data() + residual.size());
  result.condition_hint = hint;
  if (!std::isfinite(result.energy) || result.energy <= 0.0) {
    throw NumericalFailure("oracle: non-positive energy", hint);
  }
  return result;
}

bool ConvergenceStudy::energies_non_increasing() const {
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i].energy > rows[i - 1].energy) return false;
  }
  return true;
}

double ConvergenceStudy::min_order() const {
  if (orders.empty()) return std::numeric_limits<double>::quiet_NaN();
  return *std::min_element(orders.begin(), orders.end());
}

ConvergenceStudy convergence_rates(int m, double x, const std::vector<int>& node_counts,
                                   std::optional<double> exact_energy) {
  for (std::size_t i = 0; i < node_counts.size(); ++i) {
    if (node_counts[i] < m + 3) throw std::invalid_argument("convergence_rates: node count below m + 3");
    if (i > 0 && node_counts[i] <= node_counts[i - 1]) {
      throw std::invalid_argument("convergence_rates: node counts must be strictly increasing");
    }
  }
  ConvergenceStudy study;
  for (int count : node_counts) {
    const OracleResult r = fem_solve(m, x, count);
    study.rows.push_back({count, r.energy, r.b_estimate});
  }
  if (exact_energy && study.rows.size() >= 2) {
    for (std::size_t i = 1; i < study.rows.size(); ++i) {
      const double coarse = study.rows[i - 1].energy - *exact_energy;
      const double fine = study.rows[i].energy - *exact_energy;
      const double h_ratio = (study.rows[i].nodes - 1.0) / (study.rows[i - 1].nodes - 1.0);
      study.orders.push_back(std::log(coarse / fine) / std::log(h_ratio));
    }
  }
  return study;
}

}  // namespace poincare::oracle
