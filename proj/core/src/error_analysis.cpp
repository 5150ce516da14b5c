#include "abel/error_analysis.hpp"

#include <cmath>
#include <string>

#include "abel/error.hpp"
#include "abel/quadrature.hpp"

namespace abel {

double delta_eps(double x, double r_lo, double r_hi, double kprime) {
  if (!(x >= 0.0) || x > r_lo || !(r_lo < r_hi)) {
    fail(Errc::domain_error, "delta_eps requires 0 <= x <= r_lo < r_hi");
  }
  if (kprime == 0.0) return 0.0;
  const double s_hi = std::sqrt((r_hi - x) * (r_hi + x));
  const double s_lo = std::sqrt((r_lo - x) * (r_lo + x));
  // x^2 * ln(...) -> 0 as x -> 0 even though the log diverges at r_lo = 0.
  double log_term = 0.0;
  if (x > 0.0) {
    log_term = x * x * g_coeff(x, r_lo, r_hi);
  }
  return 0.5 * kprime * ((r_hi - 2.0 * r_lo) * s_hi + r_lo * s_lo + log_term);
}

std::vector<double> kprime_proxy(const Mesh& mesh, const SolutionVector& k) {
  if (k.size() != mesh.size()) {
    fail(Errc::invalid_argument, "kprime_proxy: length mismatch");
  }
  std::vector<double> slopes(mesh.size() - 1);
  for (std::size_t j = 0; j + 1 < mesh.size(); ++j) {
    slopes[j] = (k[j + 1] - k[j]) / mesh.step(j);
  }
  return slopes;
}

ErrorEstimate error_recursion(const Mesh& mesh, const SolutionVector& k) {
  const std::size_t n = mesh.size();
  const auto m = static_cast<Eigen::Index>(n - 1);
  ErrorEstimate est;
  est.derivative_proxy = kprime_proxy(mesh, k);
  est.interval_errors = Eigen::MatrixXd::Zero(m, m);
  est.row_sums.assign(n - 1, 0.0);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    double sum = 0.0;
    for (std::size_t j = i; j + 1 < n; ++j) {
      const double e = delta_eps(mesh[i], mesh[j], mesh[j + 1], est.derivative_proxy[j]);
      est.interval_errors(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = e;
      sum += e;
    }
    est.row_sums[i] = sum;
  }

  std::vector<double>& dk = est.node_errors;
  dk.assign(n, 0.0);
  for (std::size_t i = n - 1; i-- > 0;) {
    double rhs = est.row_sums[i];
    for (std::size_t j = i + 1; j + 1 < n; ++j) {
      rhs -= p_coeff(mesh[i], mesh[j], mesh[j + 1]) * dk[j];
    }
    dk[i] = rhs / p_coeff(mesh[i], mesh[i], mesh[i + 1]);
  }
  dk[n - 1] = dk[n - 2];
  return est;
}

SolutionVector refined_solution(const SolutionVector& k, const ErrorEstimate& err) {
  if (k.size() != err.node_errors.size()) {
    fail(Errc::invalid_argument, "refined_solution: length mismatch");
  }
  SolutionVector out = k;
  for (std::size_t i = 0; i < out.size(); ++i) {
    out.values[i] -= err.node_errors[i];
  }
  return out;
}

std::vector<double> noisy_bounds(const Mesh& mesh, const ErrorEstimate& err,
                                 std::span<const double> deltas) {
  const std::size_t n = mesh.size();
  if (deltas.size() != n || err.row_sums.size() + 1 != n) {
    fail(Errc::invalid_argument, "noisy_bounds: expected " + std::to_string(n) + " deltas");
  }
  for (const double d : deltas) {
    if (!(d >= 0.0)) fail(Errc::invalid_argument, "noisy_bounds: deltas must be nonnegative");
  }
  std::vector<double> bound(n, 0.0);
  // The last row has a single term, so |eps| = |deps| there and one loop covers both cases.
  for (std::size_t i = n - 1; i-- > 0;) {
    double rhs = std::abs(err.row_sums[i]) + deltas[i];
    for (std::size_t j = i + 1; j + 1 < n; ++j) {
      rhs += p_coeff(mesh[i], mesh[j], mesh[j + 1]) * bound[j];
    }
    bound[i] = rhs / p_coeff(mesh[i], mesh[i], mesh[i + 1]);
  }
  bound[n - 1] = bound[n - 2];
  return bound;
}

}  // namespace abel
