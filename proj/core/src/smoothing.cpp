#include "abel/smoothing.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <string>

#include "abel/error.hpp"

namespace abel {

SmoothingSpline::SmoothingSpline(std::vector<double> knots, Coefficients coeffs, double p)
    : knots_(std::move(knots)), coeffs_(std::move(coeffs)), p_(p) {}

std::size_t SmoothingSpline::locate(double x) const {
  if (!(x >= knots_.front() && x <= knots_.back())) {
    fail(Errc::out_of_range, "spline evaluated at " + std::to_string(x) + " outside [" +
                                 std::to_string(knots_.front()) + ", " +
                                 std::to_string(knots_.back()) + "]");
  }
  const auto it = std::upper_bound(knots_.begin(), knots_.end(), x);
  const auto idx = static_cast<std::size_t>(std::distance(knots_.begin(), it));
  return std::min(idx == 0 ? 0 : idx - 1, knots_.size() - 2);
}

double SmoothingSpline::operator()(double x) const {
  const std::size_t i = locate(x);
  const double t = x - knots_[i];
  return coeffs_.a[i] + t * (coeffs_.b[i] + t * (coeffs_.c[i] + t * coeffs_.d[i]));
}

double SmoothingSpline::derivative(double x) const {
  const std::size_t i = locate(x);
  const double t = x - knots_[i];
  return coeffs_.b[i] + t * (2.0 * coeffs_.c[i] + 3.0 * t * coeffs_.d[i]);
}

double SmoothingSpline::second_derivative(double x) const {
  const std::size_t i = locate(x);
  const double t = x - knots_[i];
  return 2.0 * coeffs_.c[i] + 6.0 * t * coeffs_.d[i];
}

double SmoothingSpline::roughness() const {
  // s'' is linear on each piece, from 2c to 2c + 6dh.
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < knots_.size(); ++i) {
    const double h = knots_[i + 1] - knots_[i];
    const double g0 = 2.0 * coeffs_.c[i];
    const double g1 = g0 + 6.0 * coeffs_.d[i] * h;
    total += h * (g0 * g0 + g0 * g1 + g1 * g1) / 3.0;
  }
  return total;
}

// Reinsch formulation. With Q the (n x n-2) second-difference matrix and R the
// (n-2 x n-2) tridiagonal Gram matrix of the hat functions for s'', the
// interior second derivatives gamma and the knot values a satisfy
//   (p R + (1 - p) Q^T Q) zeta = Q^T y,  gamma = p zeta,  a = y - (1 - p) Q zeta.
SmoothingSpline fit_spline(std::span<const double> x, std::span<const double> y, double p) {
  const std::size_t n = x.size();
  if (n < 4) {
    fail(Errc::invalid_argument, "smoothing spline needs at least 4 points, got " + std::to_string(n));
  }
  if (y.size() != n) {
    fail(Errc::invalid_argument, "smoothing spline: x and y lengths differ");
  }
  if (!(p >= 0.0 && p <= 1.0)) {
    fail(Errc::invalid_argument, "smoothing parameter must lie in [0, 1]");
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (!(x[i + 1] > x[i])) {
      fail(Errc::invalid_argument, "spline sites must be strictly increasing");
    }
  }

  const auto m = static_cast<Eigen::Index>(n - 2);
  std::vector<double> h(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) h[i] = x[i + 1] - x[i];

  Eigen::MatrixXd q = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), m);
  Eigen::MatrixXd r = Eigen::MatrixXd::Zero(m, m);
  for (Eigen::Index c = 0; c < m; ++c) {
    const auto k = static_cast<std::size_t>(c) + 1;  // interior knot index
    q(c, c) = 1.0 / h[k - 1];
    q(c + 1, c) = -1.0 / h[k - 1] - 1.0 / h[k];
    q(c + 2, c) = 1.0 / h[k];
    r(c, c) = (h[k - 1] + h[k]) / 3.0;
    if (c + 1 < m) {
      r(c, c + 1) = h[k] / 6.0;
      r(c + 1, c) = h[k] / 6.0;
    }
  }

  const Eigen::Map<const Eigen::VectorXd> yv(y.data(), static_cast<Eigen::Index>(n));
  const Eigen::MatrixXd system = p * r + (1.0 - p) * (q.transpose() * q);
  const Eigen::VectorXd zeta = system.ldlt().solve(q.transpose() * yv);
  const Eigen::VectorXd values = yv - (1.0 - p) * (q * zeta);

  std::vector<double> gamma(n, 0.0);
  for (Eigen::Index c = 0; c < m; ++c) gamma[static_cast<std::size_t>(c) + 1] = p * zeta(c);

  SmoothingSpline::Coefficients co;
  co.a.resize(n - 1);
  co.b.resize(n - 1);
  co.c.resize(n - 1);
  co.d.resize(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const auto ii = static_cast<Eigen::Index>(i);
    co.a[i] = values(ii);
    co.b[i] = (values(ii + 1) - values(ii)) / h[i] - h[i] * (2.0 * gamma[i] + gamma[i + 1]) / 6.0;
    co.c[i] = 0.5 * gamma[i];
    co.d[i] = (gamma[i + 1] - gamma[i]) / (6.0 * h[i]);
  }
  return SmoothingSpline(std::vector<double>(x.begin(), x.end()), std::move(co), p);
}

double eval_spline(const SmoothingSpline& s, double x) { return s(x); }

double eval_spline_deriv(const SmoothingSpline& s, double x) { return s.derivative(x); }

std::vector<double> resample(const SmoothingSpline& s, const Mesh& new_mesh) {
  std::vector<double> out;
  out.reserve(new_mesh.size());
  for (const double x : new_mesh.nodes()) out.push_back(s(x));
  return out;
}

}  // namespace abel
