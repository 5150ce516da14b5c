#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "abel/quadrature.hpp"
#include "abel/samples.hpp"

namespace abel {

struct RegularizationConfig {
  double delta = 0.0;  ///< discrepancy level: target ||A k_alpha - f||_2
  double alpha_min = 1e-12;
  double alpha_max = 1e4;
  double rel_tol = 1e-3;
  int max_iterations = 200;
  std::optional<double> alpha_override;

  /// Throws invalid_argument on an empty or inverted bracket or rel_tol outside (0, 1).
  void validate() const;
};

enum class AlphaStatus {
  Converged,
  DeltaUnreachableLow,   ///< delta below the residual at alpha_min
  DeltaUnreachableHigh,  ///< delta above the residual at alpha_max
  IterationLimit,
  Overridden,
};

[[nodiscard]] std::string_view to_string(AlphaStatus status) noexcept;

struct AlphaChoice {
  double alpha = 0.0;
  double residual = 0.0;
  int iterations = 0;
  AlphaStatus status = AlphaStatus::Converged;
};

/// k_alpha = (alpha I + A^T A)^{-1} A^T f via Cholesky. Throws invalid_argument
/// for alpha <= 0 or mismatched shapes.
[[nodiscard]] std::vector<double> tikhonov_solve(const Eigen::MatrixXd& a, std::span<const double> f,
                                                 double alpha);
[[nodiscard]] std::vector<double> tikhonov_solve(const QuadratureMatrix& a, std::span<const double> f,
                                                 double alpha);

/// ||A k - f||_2.
[[nodiscard]] double residual_norm(const Eigen::MatrixXd& a, std::span<const double> k,
                                   std::span<const double> f);
[[nodiscard]] double residual_norm(const QuadratureMatrix& a, std::span<const double> k,
                                   std::span<const double> f);

/// Discrepancy principle: bisection on log10(alpha) inside [alpha_min, alpha_max]
/// until | ||A k_alpha - f|| - delta | <= rel_tol * delta. Relies on the residual
/// being nondecreasing in alpha. With cfg.alpha_override set, no search is done.
[[nodiscard]] AlphaChoice choose_alpha(const Eigen::MatrixXd& a, std::span<const double> f,
                                       const RegularizationConfig& cfg);
[[nodiscard]] AlphaChoice choose_alpha(const QuadratureMatrix& a, std::span<const double> f,
                                       const RegularizationConfig& cfg);

/// f = q / 2 restricted to the n-1 rows of the system.
[[nodiscard]] std::vector<double> half_source(const SourceSamples& q);

/// Discrepancy level matching per-node noise levels of q: || delta_i / 2 ||_2 over rows 0..n-2.
[[nodiscard]] double discrepancy_from_noise(std::span<const double> noise_levels);

/// Regularized solution on the full mesh, endpoint filled per rule.
[[nodiscard]] SolutionVector tikhonov_solution(const QuadratureMatrix& a, const SourceSamples& q,
                                               double alpha,
                                               EndpointRule rule = EndpointRule::ExtrapolateLinear);

}  // namespace abel
