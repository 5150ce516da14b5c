#pragma once

#include "abel/mesh.hpp"
#include "abel/samples.hpp"

namespace abel {

/// Onion-peeling solve of the triangular system sum_{j>=i} p_ij k_j = q_i / 2
/// (i = 0..n-2) by back substitution, followed by the endpoint rule at R.
/// q.values[n-1] is accepted but never read.
[[nodiscard]] SolutionVector solve_first(const Mesh& mesh, const SourceSamples& q,
                                         EndpointRule rule = EndpointRule::ExtrapolateLinear);

/// Evaluates the analytic inversion k(r) = -(1/pi) int_r^R q'(x) / sqrt(x^2 - r^2) dx
/// with q' held constant on each [x_i, x_{i+1}). The centre node, where the
/// log coefficient is infinite and q'(0) = 0, falls back to row 0 of the
/// first method using the already computed k_1 .. k_{n-2}.
[[nodiscard]] SolutionVector solve_second(const Mesh& mesh, const SourceSamples& q,
                                          const DerivativeSamples& qprime,
                                          EndpointRule rule = EndpointRule::ExtrapolateLinear);

enum class DerivativeScheme {
  ForwardDifference,
  SplineDerivative,
};

/// Estimates q' at the nodes. ForwardDifference uses (q_{i+1} - q_i) / h_i and
/// repeats the last quotient at R; SplineDerivative differentiates a cubic
/// smoothing spline with parameter smoothing_p.
[[nodiscard]] DerivativeSamples estimate_qprime(const Mesh& mesh, const SourceSamples& q,
                                                DerivativeScheme scheme,
                                                double smoothing_p = 0.99);

}  // namespace abel
