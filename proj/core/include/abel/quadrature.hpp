#pragma once

#include <Eigen/Dense>

#include "abel/mesh.hpp"
#include "abel/samples.hpp"

namespace abel {

enum class KernelKind {
  SqrtKernel,  ///< r / sqrt(r^2 - x^2), coefficients p_ij
  LogKernel,   ///< 1 / sqrt(x^2 - r^2), coefficients g_ij
};

/// Exact integral of r / sqrt(r^2 - x^2) over [r_lo, r_hi]:
///   sqrt(r_hi^2 - x^2) - sqrt(r_lo^2 - x^2).
/// Requires 0 <= x <= r_lo <= r_hi; throws domain_error otherwise.
[[nodiscard]] double p_coeff(double x, double r_lo, double r_hi);

/// Exact integral of 1 / sqrt(x^2 - r^2) over [x_lo, x_hi]:
///   ln[(x_hi + sqrt(x_hi^2 - r^2)) / (x_lo + sqrt(x_lo^2 - r^2))].
/// Requires 0 <= r <= x_lo <= x_hi. r == x_lo == 0 is the log-divergent
/// corner and throws degenerate_node.
[[nodiscard]] double g_coeff(double r, double x_lo, double x_hi);

/// Upper-triangular (n-1)x(n-1) coefficient matrix of the discretized
/// equation on a given mesh. Row i belongs to node x_i, column j to the
/// interval [r_j, r_{j+1}).
class QuadratureMatrix {
 public:
  QuadratureMatrix(Mesh mesh, KernelKind kind, Eigen::MatrixXd entries)
      : mesh_(std::move(mesh)), kind_(kind), entries_(std::move(entries)) {}

  [[nodiscard]] const Mesh& mesh() const noexcept { return mesh_; }
  [[nodiscard]] KernelKind kind() const noexcept { return kind_; }
  [[nodiscard]] const Eigen::MatrixXd& entries() const noexcept { return entries_; }
  [[nodiscard]] Eigen::Index dim() const noexcept { return entries_.rows(); }
  [[nodiscard]] double operator()(Eigen::Index i, Eigen::Index j) const { return entries_(i, j); }

 private:
  Mesh mesh_;
  KernelKind kind_;
  Eigen::MatrixXd entries_;
};

/// SqrtKernel: entry(i, j) = p_coeff(x_i, r_j, r_{j+1}) for j >= i.
/// LogKernel:  entry(i, j) = g_coeff(r_i, x_j, x_{j+1}) for j >= i; row 0 is
/// degenerate there and throws degenerate_node (use assemble_log_rows for
/// rows 1..n-2 only).
[[nodiscard]] QuadratureMatrix assemble_matrix(const Mesh& mesh, KernelKind kind);

/// LogKernel coefficients for rows 1..n-2, row 0 left zero.
[[nodiscard]] QuadratureMatrix assemble_log_rows(const Mesh& mesh);

/// Forward Abel projection of a piecewise-constant k:
///   q_i = 2 * sum_{j >= i} p_ij k_j,  q_{n-1} = 0.
/// The last entry of k is not used.
[[nodiscard]] SourceSamples forward_apply(const Mesh& mesh, const SolutionVector& k);

}  // namespace abel
