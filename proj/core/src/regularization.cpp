#include "abel/regularization.hpp"

#include <cmath>
#include <string>

#include "abel/error.hpp"

namespace abel {
namespace {

using Vec = Eigen::VectorXd;

Eigen::Map<const Vec> as_vector(std::span<const double> v) {
  return {v.data(), static_cast<Eigen::Index>(v.size())};
}

void check_shapes(const Eigen::MatrixXd& a, std::size_t k, std::size_t f) {
  if (static_cast<std::size_t>(a.cols()) != k || static_cast<std::size_t>(a.rows()) != f) {
    fail(Errc::invalid_argument, "shape mismatch: operator is " + std::to_string(a.rows()) + "x" +
                                     std::to_string(a.cols()) + ", k has " + std::to_string(k) +
                                     ", f has " + std::to_string(f));
  }
}

// Precomputed normal-equation pieces reused across the alpha search.
class NormalEquations {
 public:
  NormalEquations(const Eigen::MatrixXd& a, std::span<const double> f)
      : a_(a), f_(as_vector(f)), gram_(a.transpose() * a), rhs_(a.transpose() * f_) {}

  Vec solve(double alpha) const {
    Eigen::MatrixXd m = gram_;
    m.diagonal().array() += alpha;
    Eigen::LLT<Eigen::MatrixXd> llt(m);
    if (llt.info() != Eigen::Success) {
      fail(Errc::singular_system, "Tikhonov system is not positive definite");
    }
    return llt.solve(rhs_);
  }

  double residual(double alpha) const { return (a_ * solve(alpha) - f_).norm(); }

 private:
  const Eigen::MatrixXd& a_;
  Vec f_;
  Eigen::MatrixXd gram_;
  Vec rhs_;
};

}  // namespace

void RegularizationConfig::validate() const {
  if (!(alpha_min > 0.0) || !(alpha_max > alpha_min)) {
    fail(Errc::invalid_argument, "alpha bracket must satisfy 0 < alpha_min < alpha_max");
  }
  if (!(rel_tol > 0.0 && rel_tol < 1.0)) {
    fail(Errc::invalid_argument, "rel_tol must lie in (0, 1)");
  }
  if (max_iterations < 1) {
    fail(Errc::invalid_argument, "max_iterations must be positive");
  }
  if (alpha_override && !(*alpha_override > 0.0)) {
    fail(Errc::invalid_argument, "alpha override must be positive");
  }
}

std::string_view to_string(AlphaStatus status) noexcept {
  switch (status) {
    case AlphaStatus::Converged: return "converged";
    case AlphaStatus::DeltaUnreachableLow: return "delta-unreachable-low";
    case AlphaStatus::DeltaUnreachableHigh: return "delta-unreachable-high";
    case AlphaStatus::IterationLimit: return "iteration-limit";
    case AlphaStatus::Overridden: return "overridden";
  }
  return "unknown";
}

std::vector<double> tikhonov_solve(const Eigen::MatrixXd& a, std::span<const double> f, double alpha) {
  if (!(alpha > 0.0)) fail(Errc::invalid_argument, "alpha must be positive");
  check_shapes(a, static_cast<std::size_t>(a.cols()), f.size());
  const Vec k = NormalEquations(a, f).solve(alpha);
  return {k.data(), k.data() + k.size()};
}

std::vector<double> tikhonov_solve(const QuadratureMatrix& a, std::span<const double> f, double alpha) {
  return tikhonov_solve(a.entries(), f, alpha);
}

double residual_norm(const Eigen::MatrixXd& a, std::span<const double> k, std::span<const double> f) {
  check_shapes(a, k.size(), f.size());
  return (a * as_vector(k) - as_vector(f)).norm();
}

double residual_norm(const QuadratureMatrix& a, std::span<const double> k, std::span<const double> f) {
  return residual_norm(a.entries(), k, f);
}

AlphaChoice choose_alpha(const Eigen::MatrixXd& a, std::span<const double> f,
                         const RegularizationConfig& cfg) {
  cfg.validate();
  check_shapes(a, static_cast<std::size_t>(a.cols()), f.size());
  const NormalEquations normal(a, f);

  if (cfg.alpha_override) {
    return {*cfg.alpha_override, normal.residual(*cfg.alpha_override), 0, AlphaStatus::Overridden};
  }
  if (!(cfg.delta > 0.0)) fail(Errc::invalid_argument, "discrepancy level delta must be positive");

  const double delta = cfg.delta;
  auto matched = [&](double r) { return std::abs(r - delta) <= cfg.rel_tol * delta; };

  const double r_min = normal.residual(cfg.alpha_min);
  if (matched(r_min)) return {cfg.alpha_min, r_min, 1, AlphaStatus::Converged};
  if (r_min > delta) return {cfg.alpha_min, r_min, 1, AlphaStatus::DeltaUnreachableLow};

  const double r_max = normal.residual(cfg.alpha_max);
  if (matched(r_max)) return {cfg.alpha_max, r_max, 2, AlphaStatus::Converged};
  if (r_max < delta) return {cfg.alpha_max, r_max, 2, AlphaStatus::DeltaUnreachableHigh};

  double lo = std::log10(cfg.alpha_min);
  double hi = std::log10(cfg.alpha_max);
  AlphaChoice choice{};
  for (int it = 1; it <= cfg.max_iterations; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double alpha = std::pow(10.0, mid);
    const double r = normal.residual(alpha);
    choice = {alpha, r, it + 2, AlphaStatus::Converged};
    if (matched(r)) return choice;
    if (r > delta) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  choice.status = AlphaStatus::IterationLimit;
  return choice;
}

AlphaChoice choose_alpha(const QuadratureMatrix& a, std::span<const double> f,
                         const RegularizationConfig& cfg) {
  return choose_alpha(a.entries(), f, cfg);
}

std::vector<double> half_source(const SourceSamples& q) {
  if (q.size() < 2) fail(Errc::invalid_argument, "source needs at least 2 samples");
  std::vector<double> f(q.size() - 1);
  for (std::size_t i = 0; i < f.size(); ++i) f[i] = 0.5 * q[i];
  return f;
}

double discrepancy_from_noise(std::span<const double> noise_levels) {
  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < noise_levels.size(); ++i) {
    const double h = 0.5 * noise_levels[i];
    sum += h * h;
  }
  return std::sqrt(sum);
}

SolutionVector tikhonov_solution(const QuadratureMatrix& a, const SourceSamples& q, double alpha,
                                 EndpointRule rule) {
  const auto interior = tikhonov_solve(a, half_source(q), alpha);
  return complete_solution(a.mesh(), interior, rule);
}

}  // namespace abel
