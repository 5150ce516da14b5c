#pragma once

#include <cstdint>
#include <variant>

#include "abel/mesh.hpp"
#include "abel/samples.hpp"

namespace abel {

enum class PhantomKind { Constant, Parabolic, Semicircle };

/// Radial profiles with closed-form Abel projections q(x) = 2 int_x^R r k(r) / sqrt(r^2 - x^2) dr:
///   Constant    k = k0                 q = 2 k0 sqrt(R^2 - x^2)
///   Parabolic   k = k0 (1 - r^2/R^2)   q = 4 k0 / (3 R^2) (R^2 - x^2)^{3/2}
///   Semicircle  k = k0 sqrt(R^2 - r^2) q = k0 pi (R^2 - x^2) / 2
struct Phantom {
  PhantomKind kind = PhantomKind::Parabolic;
  double k0 = 1.0;
  double radius = 1.0;
};

/// Throws out_of_range for x outside [0, R], invalid_argument for R <= 0.
[[nodiscard]] double phantom_q(const Phantom& ph, double x);
[[nodiscard]] double phantom_k(const Phantom& ph, double r);

struct PhantomSamples {
  SourceSamples q;
  SolutionVector k;
};

/// Exact q and k at every mesh node. mesh.radius() must equal ph.radius.
[[nodiscard]] PhantomSamples sample_phantom(const Phantom& ph, const Mesh& mesh);

/// Integrands of the three singular kernels. Each is singular (or has a
/// singular derivative) only at its parameter, which must not exceed the
/// lower integration limit.
namespace integrand {
struct Sqrt {  ///< r / sqrt(r^2 - x^2)
  double x;
};
struct Log {  ///< 1 / sqrt(x^2 - r^2), integration variable x
  double r;
};
struct SlopeSqrt {  ///< r (r - r_lo) / sqrt(r^2 - x^2)
  double x;
  double r_lo;
};
}  // namespace integrand

using Integrand = std::variant<integrand::Sqrt, integrand::Log, integrand::SlopeSqrt>;

/// Adaptive Gauss-Kronrod (7/15) quadrature after the substitution
/// var = s + t^2, s being the kernel's singular point, which turns the
/// inverse square root into a smooth integrand. Throws oracle_failure if
/// the error estimate stays above tol, relative once the value exceeds 1.
[[nodiscard]] double oracle_integral(const Integrand& f, double a, double b, double tol = 1e-12);

/// q_i * (1 + sigma * z_i) with z_i ~ N(0, 1) drawn from std::mt19937_64(seed).
/// Sets noise_levels to sigma * |q_i|.
[[nodiscard]] SourceSamples add_noise(const SourceSamples& q, double sigma, std::uint64_t seed);

/// Euclidean norm of the perturbation of f = q/2 over the system rows 0..n-2;
/// the natural discrepancy level for the regularized solve.
[[nodiscard]] double noise_norm(const SourceSamples& clean, const SourceSamples& noisy);

}  // namespace abel
