#include "abel/tomography.hpp"

#include <cmath>
#include <string>

#include "abel/error.hpp"
#include "abel/quadrature.hpp"
#include "abel/smoothing.hpp"

namespace abel {

SourceSamples intensity_to_q(const TomographyInput& inp) {
  if (!(inp.planck_reference > 0.0) || !std::isfinite(inp.planck_reference)) {
    fail(Errc::invalid_measurement, "Planck reference B(T0) must be positive");
  }
  SourceSamples q;
  q.values.reserve(inp.intensities.size());
  for (std::size_t i = 0; i < inp.intensities.size(); ++i) {
    const double v = inp.intensities[i];
    if (!(v > 0.0) || !std::isfinite(v)) {
      fail(Errc::invalid_measurement, "intensity at node " + std::to_string(i) + " is not positive");
    }
    q.values.push_back(-std::log(v / inp.planck_reference));
  }
  return q;
}

Reconstruction reconstruct(const TomographyInput& inp, const Mesh& mesh,
                           const ReconstructOptions& options) {
  if (inp.intensities.size() != mesh.size()) {
    fail(Errc::invalid_argument, "intensity count " + std::to_string(inp.intensities.size()) +
                                     " differs from mesh size " + std::to_string(mesh.size()));
  }

  Mesh solve_mesh = mesh;
  TomographyInput data = inp;
  if (options.smooth) {
    const auto spline = fit_spline(mesh.nodes(), inp.intensities, options.smooth->p);
    if (options.smooth->target_n) {
      solve_mesh = uniform_mesh(*options.smooth->target_n, mesh.radius());
    }
    data.intensities = resample(spline, solve_mesh);
  }

  SourceSamples q = intensity_to_q(data);
  SolutionVector k;
  if (options.method == Method::First) {
    k = solve_first(solve_mesh, q, options.endpoint_rule);
  } else {
    const auto qprime = estimate_qprime(solve_mesh, q, options.qprime_scheme,
                                        options.smooth ? options.smooth->p : SmoothingSpline::default_p);
    k = solve_second(solve_mesh, q, qprime, options.endpoint_rule);
  }

  const auto a = assemble_matrix(solve_mesh, KernelKind::SqrtKernel);
  const auto f = half_source(q);
  const std::span<const double> k_rows(k.values.data(), k.values.size() - 1);

  Reconstruction out{solve_mesh, q, k, residual_norm(a, k_rows, f), std::nullopt, std::nullopt,
                     std::nullopt};
  if (options.regularize) {
    const AlphaChoice choice = choose_alpha(a, f, *options.regularize);
    out.k_alpha = tikhonov_solution(a, q, choice.alpha, options.endpoint_rule);
    out.alpha = choice;
  }
  if (options.method == Method::First) {
    out.errors = error_recursion(solve_mesh, out.k);
  }
  return out;
}

}  // namespace abel
