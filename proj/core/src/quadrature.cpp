#include "abel/quadrature.hpp"

#include <cmath>
#include <string>

#include "abel/error.hpp"

namespace abel {
namespace {

// Below this relative gap between the two square roots the direct difference
// loses most of its significant digits.
constexpr double kCancellationGuard = 1e-6;

double sqrt_diff_of_squares(double a, double b) {
  return std::sqrt((a - b) * (a + b));
}

}  // namespace

double p_coeff(double x, double r_lo, double r_hi) {
  if (!(x >= 0.0) || x > r_lo || r_lo > r_hi) {
    fail(Errc::domain_error, "p_coeff requires 0 <= x <= r_lo <= r_hi (x=" + std::to_string(x) +
                                 ", r_lo=" + std::to_string(r_lo) + ", r_hi=" + std::to_string(r_hi) + ")");
  }
  if (r_lo == r_hi) return 0.0;
  const double s_hi = sqrt_diff_of_squares(r_hi, x);
  const double s_lo = sqrt_diff_of_squares(r_lo, x);
  if (s_hi - s_lo <= kCancellationGuard * s_hi) {
    return (r_hi - r_lo) * (r_hi + r_lo) / (s_hi + s_lo);
  }
  return s_hi - s_lo;
}

double g_coeff(double r, double x_lo, double x_hi) {
  if (!(r >= 0.0) || r > x_lo || x_lo > x_hi) {
    fail(Errc::domain_error, "g_coeff requires 0 <= r <= x_lo <= x_hi (r=" + std::to_string(r) +
                                 ", x_lo=" + std::to_string(x_lo) + ", x_hi=" + std::to_string(x_hi) + ")");
  }
  if (x_lo == x_hi) return 0.0;
  if (x_lo == 0.0) {
    fail(Errc::degenerate_node, "g_coeff is log-divergent at r = x_lo = 0");
  }
  const double s_hi = sqrt_diff_of_squares(x_hi, r);
  const double s_lo = sqrt_diff_of_squares(x_lo, r);
  // ln(num / den) as log1p((num - den) / den) with the root difference
  // rationalized, so short intervals keep full precision.
  const double dx = x_hi - x_lo;
  const double ds = dx * (x_hi + x_lo) / (s_hi + s_lo);
  return std::log1p((dx + ds) / (x_lo + s_lo));
}

QuadratureMatrix assemble_matrix(const Mesh& mesh, KernelKind kind) {
  const auto m = static_cast<Eigen::Index>(mesh.size() - 1);
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(m, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    const double node = mesh[static_cast<std::size_t>(i)];
    for (Eigen::Index j = i; j < m; ++j) {
      const double lo = mesh[static_cast<std::size_t>(j)];
      const double hi = mesh[static_cast<std::size_t>(j + 1)];
      a(i, j) = kind == KernelKind::SqrtKernel ? p_coeff(node, lo, hi) : g_coeff(node, lo, hi);
    }
  }
  return QuadratureMatrix(mesh, kind, std::move(a));
}

QuadratureMatrix assemble_log_rows(const Mesh& mesh) {
  const auto m = static_cast<Eigen::Index>(mesh.size() - 1);
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(m, m);
  for (Eigen::Index i = 1; i < m; ++i) {
    const double r = mesh[static_cast<std::size_t>(i)];
    for (Eigen::Index j = i; j < m; ++j) {
      a(i, j) = g_coeff(r, mesh[static_cast<std::size_t>(j)], mesh[static_cast<std::size_t>(j + 1)]);
    }
  }
  return QuadratureMatrix(mesh, KernelKind::LogKernel, std::move(a));
}

SourceSamples forward_apply(const Mesh& mesh, const SolutionVector& k) {
  const std::size_t n = mesh.size();
  if (k.size() != n) {
    fail(Errc::invalid_argument, "forward_apply: solution has " + std::to_string(k.size()) +
                                     " values for a mesh of " + std::to_string(n) + " nodes");
  }
  SourceSamples q;
  q.values.assign(n, 0.0);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    double sum = 0.0;
    for (std::size_t j = i; j + 1 < n; ++j) {
      sum += p_coeff(mesh[i], mesh[j], mesh[j + 1]) * k[j];
    }
    q.values[i] = 2.0 * sum;
  }
  return q;
}

}  // namespace abel
