#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "abel/error.hpp"
#include "abel/quadrature.hpp"
#include "abel/synthetic.hpp"
#include "support.hpp"

using namespace abel;
using abel::testing::random_mesh;

namespace {

Errc code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected abel::Error");
  return Errc::io_error;
}

}  // namespace

TEST_CASE("p_coeff closed form") {
  CHECK(p_coeff(0.0, 3.0, 5.0) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(p_coeff(0.7, 0.9, 0.9) == 0.0);
  // 4 - sqrt(7), confirmed by 30-digit quadrature of r / sqrt(r^2 - 9) on [4, 5].
  CHECK(p_coeff(3.0, 4.0, 5.0) == doctest::Approx(1.3542486889354094).epsilon(1e-15));
  CHECK(p_coeff(0.5, 0.5, 1.0) == doctest::Approx(0.86602540378443865).epsilon(1e-15));
  CHECK(code_of([] { (void)p_coeff(0.6, 0.5, 1.0); }) == Errc::domain_error);
}

TEST_CASE("p_coeff stays accurate when the square roots nearly cancel") {
  const double x = 1.0;
  const double lo = 1.0 + 1e-9;
  const double hi = 1.0 + 2e-9;
  const long double xl = x, ll = lo, hl = hi;
  const long double ref = (hl - ll) * (hl + ll) /
                          (std::sqrt((hl - xl) * (hl + xl)) + std::sqrt((ll - xl) * (ll + xl)));
  CHECK(p_coeff(x, lo, hi) == doctest::Approx(static_cast<double>(ref)).epsilon(1e-12));

  // Far from the singular point both branches agree.
  const double far = p_coeff(0.1, 10.0, 10.0 + 1e-7);
  CHECK(far == doctest::Approx(1e-7 * (20.0 + 1e-7) / (2.0 * std::sqrt(99.99))).epsilon(1e-8));
}

TEST_CASE("g_coeff closed form") {
  CHECK(g_coeff(0.0, 1.0, std::numbers::e) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(g_coeff(0.4, 0.8, 0.8) == 0.0);
  // ln(9 / (4 + sqrt 7)), confirmed by 30-digit quadrature of 1 / sqrt(x^2 - 9) on [4, 5].
  CHECK(g_coeff(3.0, 4.0, 5.0) == doctest::Approx(0.30324682744420406).epsilon(1e-14));
  CHECK(code_of([] { (void)g_coeff(0.6, 0.5, 1.0); }) == Errc::domain_error);
  CHECK(code_of([] { (void)g_coeff(0.0, 0.0, 1.0); }) == Errc::degenerate_node);
}

TEST_CASE("closed forms agree with the adaptive quadrature oracle") {
  std::mt19937_64 gen(20240611);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int t = 0; t < 100; ++t) {
    const double x = 2.0 * u(gen);
    const double lo = x + (t % 4 == 0 ? 0.0 : 1.5 * u(gen));
    const double hi = lo + 1e-3 + 2.0 * u(gen);
    const double p = p_coeff(x, lo, hi);
    const double p_ref = oracle_integral(integrand::Sqrt{x}, lo, hi);
    CHECK(std::abs(p - p_ref) <= 1e-8 * std::abs(p_ref));
    if (lo > 0.0) {
      const double g = g_coeff(x, lo, hi);
      const double g_ref = oracle_integral(integrand::Log{x}, lo, hi);
      CHECK(std::abs(g - g_ref) <= 1e-8 * std::abs(g_ref));
    }
  }
}

TEST_CASE("assembled SqrtKernel matrix") {
  const auto mesh = uniform_mesh(3, 1.0);
  const auto a = assemble_matrix(mesh, KernelKind::SqrtKernel);
  REQUIRE(a.dim() == 2);
  CHECK(a(0, 0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(a(0, 1) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(a(1, 0) == 0.0);
  CHECK(a(1, 1) == doctest::Approx(0.86602540378443865).epsilon(1e-15));
  CHECK(a.kind() == KernelKind::SqrtKernel);
}

TEST_CASE("LogKernel assembly hits the degenerate centre node") {
  const auto mesh = uniform_mesh(5, 1.0);
  CHECK(code_of([&] { (void)assemble_matrix(mesh, KernelKind::LogKernel); }) == Errc::degenerate_node);
  const auto g = assemble_log_rows(mesh);
  CHECK(g(0, 0) == 0.0);
  CHECK(g(1, 1) == doctest::Approx(g_coeff(0.25, 0.25, 0.5)));
  CHECK(g(2, 3) == doctest::Approx(g_coeff(0.5, 0.75, 1.0)));
}

TEST_CASE("matrices are triangular, nonnegative and telescope") {
  std::mt19937_64 gen(7);
  for (std::size_t n : {3u, 4u, 17u, 60u, 101u}) {
    const auto mesh = random_mesh(gen, n, 2.0);
    const auto a = assemble_matrix(mesh, KernelKind::SqrtKernel);
    const auto g = assemble_log_rows(mesh);
    for (Eigen::Index i = 0; i < a.dim(); ++i) {
      double row = 0.0;
      for (Eigen::Index j = 0; j < a.dim(); ++j) {
        if (j < i) {
          CHECK(a(i, j) == 0.0);
          CHECK(g(i, j) == 0.0);
        }
        CHECK(a(i, j) >= 0.0);
        CHECK(g(i, j) >= 0.0);
        row += a(i, j);
      }
      CHECK(a(i, i) > 0.0);
      const double xi = mesh[static_cast<std::size_t>(i)];
      const double exact = std::sqrt(4.0 - xi * xi);
      CHECK(std::abs(row - exact) <= 1e-13 * exact);
    }
  }
}

TEST_CASE("forward_apply") {
  std::mt19937_64 gen(99);
  const auto mesh = random_mesh(gen, 23, 1.0);

  SolutionVector ones{std::vector<double>(mesh.size(), 1.0)};
  const auto q = forward_apply(mesh, ones);
  for (std::size_t i = 0; i < mesh.size(); ++i) {
    CHECK(q[i] == doctest::Approx(2.0 * std::sqrt(1.0 - mesh[i] * mesh[i])).epsilon(1e-13));
  }

  SolutionVector zeros{std::vector<double>(mesh.size(), 0.0)};
  for (const double v : forward_apply(mesh, zeros).values) CHECK(v == 0.0);

  SolutionVector short_k{std::vector<double>(mesh.size() - 1, 1.0)};
  CHECK(code_of([&] { (void)forward_apply(mesh, short_k); }) == Errc::invalid_argument);
}

TEST_CASE("forward_apply on the semicircle profile approaches the analytic projection") {
  const auto mesh = uniform_mesh(201, 1.0);
  SolutionVector k;
  for (const double r : mesh.nodes()) k.values.push_back(std::sqrt(1.0 - r * r));
  const auto q = forward_apply(mesh, k);
  const double h = mesh.step(0);
  // Left rectangles over a decreasing profile overshoot by about h at x = 0.
  CHECK(std::abs(q[0] - std::numbers::pi / 2.0) <= 2.0 * h);
  CHECK(q[0] > std::numbers::pi / 2.0);
  CHECK(q[200] == 0.0);
}
