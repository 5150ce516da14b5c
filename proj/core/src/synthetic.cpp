#include "abel/synthetic.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "abel/error.hpp"

namespace abel {
namespace {

void check_phantom(const Phantom& ph) {
  if (!(ph.radius > 0.0)) fail(Errc::invalid_argument, "phantom radius must be positive");
}

void check_span(const Phantom& ph, double v, const char* name) {
  if (!(v >= 0.0 && v <= ph.radius)) {
    fail(Errc::out_of_range, std::string(name) + " = " + std::to_string(v) + " outside [0, R]");
  }
}

template <class F>
double gauss_kronrod(F&& f, double a, double b, double tol) {
  if (a == b) return 0.0;
  double err = 0.0;
  const double value = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
      std::forward<F>(f), a, b, 15, 1e-12, &err);
  // The Kronrod estimate |G7 - K15| overstates the K15 error, so scale it like the value.
  if (!std::isfinite(value) || err > tol * std::max(1.0, std::abs(value))) {
    fail(Errc::oracle_failure, "oracle quadrature error estimate " + std::to_string(err) +
                                   " exceeds tolerance " + std::to_string(tol));
  }
  return value;
}

}  // namespace

double phantom_q(const Phantom& ph, double x) {
  check_phantom(ph);
  check_span(ph, x, "x");
  const double rr = ph.radius * ph.radius;
  const double w = (ph.radius - x) * (ph.radius + x);
  switch (ph.kind) {
    case PhantomKind::Constant:
      return 2.0 * ph.k0 * std::sqrt(w);
    case PhantomKind::Parabolic:
      return 4.0 * ph.k0 / (3.0 * rr) * w * std::sqrt(w);
    case PhantomKind::Semicircle:
      return ph.k0 * std::numbers::pi * w / 2.0;
  }
  return 0.0;
}

double phantom_k(const Phantom& ph, double r) {
  check_phantom(ph);
  check_span(ph, r, "r");
  switch (ph.kind) {
    case PhantomKind::Constant:
      return ph.k0;
    case PhantomKind::Parabolic:
      return ph.k0 * (1.0 - (r / ph.radius) * (r / ph.radius));
    case PhantomKind::Semicircle:
      return ph.k0 * std::sqrt((ph.radius - r) * (ph.radius + r));
  }
  return 0.0;
}

PhantomSamples sample_phantom(const Phantom& ph, const Mesh& mesh) {
  if (mesh.radius() != ph.radius) {
    fail(Errc::invalid_argument, "mesh radius differs from phantom radius");
  }
  PhantomSamples s;
  s.q.values.reserve(mesh.size());
  s.k.values.reserve(mesh.size());
  for (const double x : mesh.nodes()) {
    s.q.values.push_back(phantom_q(ph, x));
    s.k.values.push_back(phantom_k(ph, x));
  }
  // Exact endpoint value; the rule tag is nominal for analytic profiles.
  s.k.endpoint_rule = EndpointRule::ExtrapolateLinear;
  return s;
}

double oracle_integral(const Integrand& f, double a, double b, double tol) {
  if (a > b) fail(Errc::invalid_argument, "oracle_integral requires a <= b");
  if (a == b) return 0.0;
  return std::visit(
      [&](const auto& kernel) -> double {
        using K = std::decay_t<decltype(kernel)>;
        double s = 0.0;
        if constexpr (std::is_same_v<K, integrand::Log>) {
          s = kernel.r;
          if (s == 0.0 && a == 0.0) {
            fail(Errc::invalid_argument, "log kernel integral diverges at r = a = 0");
          }
        } else {
          s = kernel.x;
        }
        if (!(s >= 0.0) || s > a) {
          fail(Errc::invalid_argument, "kernel singularity lies inside the integration interval");
        }
        if constexpr (std::is_same_v<K, integrand::SlopeSqrt>) {
          if (!(kernel.r_lo >= s)) fail(Errc::invalid_argument, "slope kernel needs x <= r_lo");
        }
        const double ta = std::sqrt(a - s);
        const double tb = std::sqrt(b - s);
        // var = s + t^2, d(var) = 2t dt, and 1/sqrt(var^2 - s^2) = 1/(t sqrt(var + s)).
        auto g = [&](double t) {
          const double v = s + t * t;
          const double root = std::sqrt(v + s);
          if constexpr (std::is_same_v<K, integrand::Sqrt>) {
            return 2.0 * v / root;
          } else if constexpr (std::is_same_v<K, integrand::Log>) {
            return 2.0 / root;
          } else {
            // v - r_lo = t^2 - (r_lo - s), factored to avoid cancellation near r_lo.
            const double tl = std::sqrt(kernel.r_lo - s);
            return 2.0 * v * ((t - tl) * (t + tl)) / root;
          }
        };
        return gauss_kronrod(g, ta, tb, tol);
      },
      f);
}

SourceSamples add_noise(const SourceSamples& q, double sigma, std::uint64_t seed) {
  if (!(sigma >= 0.0)) fail(Errc::invalid_argument, "noise sigma must be nonnegative");
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  SourceSamples out;
  out.values.resize(q.size());
  std::vector<double> levels(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) {
    const double z = normal(gen);
    out.values[i] = q[i] * (1.0 + sigma * z);
    levels[i] = sigma * std::abs(q[i]);
  }
  out.noise_levels = std::move(levels);
  return out;
}

double noise_norm(const SourceSamples& clean, const SourceSamples& noisy) {
  if (clean.size() != noisy.size()) fail(Errc::invalid_argument, "noise_norm: length mismatch");
  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < clean.size(); ++i) {
    const double d = 0.5 * (noisy[i] - clean[i]);
    sum += d * d;
  }
  return std::sqrt(sum);
}

}  // namespace abel
