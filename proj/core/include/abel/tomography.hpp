#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "abel/direct_solvers.hpp"
#include "abel/error_analysis.hpp"
#include "abel/mesh.hpp"
#include "abel/regularization.hpp"
#include "abel/samples.hpp"

namespace abel {

/// Measured ray intensities on the mesh nodes and the blackbody reference of
/// the ray source, in the same detector units. The source temperature is
/// carried for provenance only.
struct TomographyInput {
  std::vector<double> intensities;
  double planck_reference = 1.0;
  double source_temperature_c = 894.4;
};

/// q_i = -ln(I_i / B). Throws invalid_measurement for nonpositive I or B.
[[nodiscard]] SourceSamples intensity_to_q(const TomographyInput& inp);

enum class Method { First, Second };

struct SmoothingOptions {
  double p = 0.99;
  std::optional<std::size_t> target_n;  ///< uniform resampling size; same mesh when unset
};

struct ReconstructOptions {
  std::optional<SmoothingOptions> smooth;
  Method method = Method::First;
  std::optional<RegularizationConfig> regularize;
  EndpointRule endpoint_rule = EndpointRule::ExtrapolateLinear;
  DerivativeScheme qprime_scheme = DerivativeScheme::ForwardDifference;
};

struct Reconstruction {
  Mesh mesh;                 ///< mesh of the solve (resampled when smoothing)
  SourceSamples q;           ///< right-hand side actually solved
  SolutionVector k;          ///< direct solution by the chosen method
  double residual = 0.0;     ///< ||A k - q/2|| of the direct solution
  std::optional<SolutionVector> k_alpha;
  std::optional<AlphaChoice> alpha;  ///< includes ||A k_alpha - q/2||
  std::optional<ErrorEstimate> errors;  ///< first method only
};

/// Optional spline smoothing/resampling of I, conversion to q, direct solve,
/// optional Tikhonov solve and, for the first method, signed error estimates.
[[nodiscard]] Reconstruction reconstruct(const TomographyInput& inp, const Mesh& mesh,
                                         const ReconstructOptions& options = {});

}  // namespace abel
