#pragma once

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "abel/mesh.hpp"
#include "abel/samples.hpp"

namespace abel {

/// Signed quadrature-error estimate for a first-method solution.
///
/// node_errors follow the triangular recurrence sum_{j>=i} p_ij dk_j = eps_i,
/// so dk_i estimates (computed - exact). The refined solution therefore
/// subtracts it; see refined_solution().
struct ErrorEstimate {
  Eigen::MatrixXd interval_errors;     ///< deps_ij, (n-1)x(n-1), upper triangular
  std::vector<double> row_sums;        ///< eps_i = sum_{j>=i} deps_ij, n-1 values
  std::vector<double> node_errors;     ///< dk_i, n values, dk_{n-1} = dk_{n-2}
  std::vector<double> derivative_proxy;  ///< k'(xi_j), n-1 values
};

/// Error of the left-rectangle rule on [r_lo, r_hi] for a k with slope kprime:
///   kprime * int_{r_lo}^{r_hi} r (r - r_lo) / sqrt(r^2 - x^2) dr
/// in closed form. Throws domain_error unless 0 <= x <= r_lo < r_hi.
[[nodiscard]] double delta_eps(double x, double r_lo, double r_hi, double kprime);

/// Forward-difference slopes (k_{j+1} - k_j) / (r_{j+1} - r_j), j = 0..n-2.
/// The last slope uses the endpoint value produced by the solver's endpoint rule.
[[nodiscard]] std::vector<double> kprime_proxy(const Mesh& mesh, const SolutionVector& k);

[[nodiscard]] ErrorEstimate error_recursion(const Mesh& mesh, const SolutionVector& k);

/// k_hat_i = k_i - dk_i. The estimate is (computed - exact), hence the minus.
[[nodiscard]] SolutionVector refined_solution(const SolutionVector& k, const ErrorEstimate& err);

/// Conservative magnitude bounds |dk_i| including measurement errors
/// delta_i of q (one per node, the last unused):
///   |dk_{n-2}| = (|deps_{n-2,n-2}| + delta_{n-2}) / p_{n-2,n-2}
///   |dk_i|     = (|eps_i| + delta_i + sum_{j>i} p_ij |dk_j|) / p_ii
/// and |dk_{n-1}| = |dk_{n-2}|.
[[nodiscard]] std::vector<double> noisy_bounds(const Mesh& mesh, const ErrorEstimate& err,
                                               std::span<const double> deltas);

}  // namespace abel
