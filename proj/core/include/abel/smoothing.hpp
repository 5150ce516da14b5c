#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "abel/mesh.hpp"

namespace abel {

/// Natural cubic smoothing spline minimizing
///   p * sum_i (y_i - s(x_i))^2 + (1 - p) * int (s'')^2
/// over the data sites. p = 1 interpolates, p = 0 gives the least-squares line.
class SmoothingSpline {
 public:
  static constexpr double default_p = 0.99;

  /// Piecewise cubic on [knots[i], knots[i+1]]:
  ///   s(t) = a[i] + b[i] t + c[i] t^2 + d[i] t^3,  t = x - knots[i].
  struct Coefficients {
    std::vector<double> a, b, c, d;
  };

  SmoothingSpline(std::vector<double> knots, Coefficients coeffs, double p);

  [[nodiscard]] double operator()(double x) const;
  [[nodiscard]] double derivative(double x) const;
  [[nodiscard]] double second_derivative(double x) const;

  /// int (s'')^2 over the knot span.
  [[nodiscard]] double roughness() const;

  [[nodiscard]] std::span<const double> knots() const noexcept { return knots_; }
  [[nodiscard]] const Coefficients& coefficients() const noexcept { return coeffs_; }
  [[nodiscard]] double smoothing_parameter() const noexcept { return p_; }
  [[nodiscard]] double lower() const noexcept { return knots_.front(); }
  [[nodiscard]] double upper() const noexcept { return knots_.back(); }

 private:
  std::size_t locate(double x) const;

  std::vector<double> knots_;
  Coefficients coeffs_;
  double p_;
};

/// Needs at least 4 strictly increasing sites and p in [0, 1].
[[nodiscard]] SmoothingSpline fit_spline(std::span<const double> x, std::span<const double> y,
                                         double p = SmoothingSpline::default_p);

/// Throw out_of_range outside the knot span; no extrapolation.
[[nodiscard]] double eval_spline(const SmoothingSpline& s, double x);
[[nodiscard]] double eval_spline_deriv(const SmoothingSpline& s, double x);

/// Spline values at the nodes of new_mesh.
[[nodiscard]] std::vector<double> resample(const SmoothingSpline& s, const Mesh& new_mesh);

}  // namespace abel
