#include "abel/direct_solvers.hpp"

#include <numbers>
#include <string>

#include "abel/error.hpp"
#include "abel/quadrature.hpp"
#include "abel/smoothing.hpp"

namespace abel {
namespace {

void require_length(std::size_t got, const Mesh& mesh, const char* what) {
  if (got != mesh.size()) {
    fail(Errc::invalid_argument, std::string(what) + " has " + std::to_string(got) +
                                     " values for a mesh of " + std::to_string(mesh.size()) + " nodes");
  }
}

}  // namespace

void apply_endpoint(const Mesh& mesh, std::span<double> values, EndpointRule rule) {
  require_length(values.size(), mesh, "solution");
  const std::size_t n = values.size();
  switch (rule) {
    case EndpointRule::Zero:
      values[n - 1] = 0.0;
      break;
    case EndpointRule::CopyPrevious:
      values[n - 1] = values[n - 2];
      break;
    case EndpointRule::ExtrapolateLinear: {
      const double ratio = (mesh[n - 1] - mesh[n - 3]) / (mesh[n - 2] - mesh[n - 3]);
      values[n - 1] = values[n - 3] + ratio * (values[n - 2] - values[n - 3]);
      break;
    }
  }
}

SolutionVector complete_solution(const Mesh& mesh, std::span<const double> interior,
                                 EndpointRule rule) {
  if (interior.size() + 1 != mesh.size()) {
    fail(Errc::invalid_argument, "expected " + std::to_string(mesh.size() - 1) +
                                     " solved values, got " + std::to_string(interior.size()));
  }
  SolutionVector k{std::vector<double>(interior.begin(), interior.end()), rule};
  k.values.push_back(0.0);
  apply_endpoint(mesh, k.values, rule);
  return k;
}

SolutionVector solve_first(const Mesh& mesh, const SourceSamples& q, EndpointRule rule) {
  require_length(q.size(), mesh, "source");
  const std::size_t n = mesh.size();
  std::vector<double> k(n, 0.0);
  for (std::size_t i = n - 1; i-- > 0;) {
    double rhs = 0.5 * q[i];
    for (std::size_t j = i + 1; j + 1 < n; ++j) {
      rhs -= p_coeff(mesh[i], mesh[j], mesh[j + 1]) * k[j];
    }
    const double diag = p_coeff(mesh[i], mesh[i], mesh[i + 1]);
    if (diag == 0.0) {
      fail(Errc::singular_system, "zero diagonal coefficient in row " + std::to_string(i));
    }
    k[i] = rhs / diag;
  }
  apply_endpoint(mesh, k, rule);
  return {std::move(k), rule};
}

SolutionVector solve_second(const Mesh& mesh, const SourceSamples& q,
                            const DerivativeSamples& qprime, EndpointRule rule) {
  require_length(q.size(), mesh, "source");
  require_length(qprime.size(), mesh, "derivative");
  const std::size_t n = mesh.size();
  std::vector<double> k(n, 0.0);
  for (std::size_t j = 1; j + 1 < n; ++j) {
    double sum = 0.0;
    for (std::size_t i = j; i + 1 < n; ++i) {
      sum += g_coeff(mesh[j], mesh[i], mesh[i + 1]) * qprime[i];
    }
    k[j] = -sum / std::numbers::pi;
  }
  double rhs = 0.5 * q[0];
  for (std::size_t j = 1; j + 1 < n; ++j) {
    rhs -= mesh.step(j) * k[j];
  }
  k[0] = rhs / mesh[1];
  apply_endpoint(mesh, k, rule);
  return {std::move(k), rule};
}

DerivativeSamples estimate_qprime(const Mesh& mesh, const SourceSamples& q,
                                  DerivativeScheme scheme, double smoothing_p) {
  require_length(q.size(), mesh, "source");
  const std::size_t n = mesh.size();
  DerivativeSamples d;
  d.values.resize(n);
  if (scheme == DerivativeScheme::ForwardDifference) {
    for (std::size_t i = 0; i + 1 < n; ++i) {
      d.values[i] = (q[i + 1] - q[i]) / mesh.step(i);
    }
    d.values[n - 1] = d.values[n - 2];
    return d;
  }
  const auto spline = fit_spline(mesh.nodes(), q.values, smoothing_p);
  for (std::size_t i = 0; i < n; ++i) {
    d.values[i] = spline.derivative(mesh[i]);
  }
  return d;
}

}  // namespace abel
