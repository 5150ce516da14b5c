#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace abel {

class Mesh;

/// How the value at the outer node r = R is filled in; the triangular system
/// only determines k_0 .. k_{n-2}.
enum class EndpointRule {
  ExtrapolateLinear,  ///< straight line through the two preceding nodes
  Zero,               ///< k(R) = 0
  CopyPrevious,       ///< k(R) = k at the previous node
};

/// Discrete absorption coefficient, one value per mesh node (1/length).
struct SolutionVector {
  std::vector<double> values;
  EndpointRule endpoint_rule = EndpointRule::ExtrapolateLinear;

  [[nodiscard]] std::size_t size() const noexcept { return values.size(); }
  [[nodiscard]] double operator[](std::size_t i) const noexcept { return values[i]; }
};

/// Right-hand side q(x_i) of the Abel equation, with optional per-node
/// measurement error levels delta_i >= 0.
struct SourceSamples {
  std::vector<double> values;
  std::optional<std::vector<double>> noise_levels;

  [[nodiscard]] std::size_t size() const noexcept { return values.size(); }
  [[nodiscard]] double operator[](std::size_t i) const noexcept { return values[i]; }
};

/// Samples of q'(x) at the mesh nodes.
struct DerivativeSamples {
  std::vector<double> values;

  [[nodiscard]] std::size_t size() const noexcept { return values.size(); }
  [[nodiscard]] double operator[](std::size_t i) const noexcept { return values[i]; }
};

/// Fills values[n-1] from values[0..n-2] according to rule.
/// values.size() must equal mesh.size().
void apply_endpoint(const Mesh& mesh, std::span<double> values, EndpointRule rule);

/// Builds a full-length solution from the n-1 values determined by a solver.
[[nodiscard]] SolutionVector complete_solution(const Mesh& mesh, std::span<const double> interior,
                                               EndpointRule rule);

}  // namespace abel
