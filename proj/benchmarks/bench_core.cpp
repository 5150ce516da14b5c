#include <benchmark/benchmark.h>

#include "abel/direct_solvers.hpp"
#include "abel/error_analysis.hpp"
#include "abel/quadrature.hpp"
#include "abel/regularization.hpp"
#include "abel/smoothing.hpp"
#include "abel/synthetic.hpp"

namespace {

const abel::Phantom kPhantom{abel::PhantomKind::Parabolic, 1.0, 1.0};

void BM_AssembleMatrix(benchmark::State& state) {
  const auto mesh = abel::uniform_mesh(static_cast<std::size_t>(state.range(0)), 1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(abel::assemble_matrix(mesh, abel::KernelKind::SqrtKernel));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_AssembleMatrix)->RangeMultiplier(2)->Range(16, 512)->Complexity(benchmark::oNSquared);

void BM_SolveFirst(benchmark::State& state) {
  const auto mesh = abel::uniform_mesh(static_cast<std::size_t>(state.range(0)), 1.0);
  const auto s = abel::sample_phantom(kPhantom, mesh);
  for (auto _ : state) benchmark::DoNotOptimize(abel::solve_first(mesh, s.q));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SolveFirst)->RangeMultiplier(2)->Range(16, 512)->Complexity(benchmark::oNSquared);

void BM_ErrorRecursion(benchmark::State& state) {
  const auto mesh = abel::uniform_mesh(static_cast<std::size_t>(state.range(0)), 1.0);
  const auto k = abel::solve_first(mesh, abel::sample_phantom(kPhantom, mesh).q);
  for (auto _ : state) benchmark::DoNotOptimize(abel::error_recursion(mesh, k));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ErrorRecursion)->RangeMultiplier(2)->Range(16, 512)->Complexity(benchmark::oNSquared);

void BM_ChooseAlpha(benchmark::State& state) {
  const auto mesh = abel::uniform_mesh(static_cast<std::size_t>(state.range(0)), 1.0);
  const auto a = abel::assemble_matrix(mesh, abel::KernelKind::SqrtKernel);
  const auto clean = abel::sample_phantom(kPhantom, mesh).q;
  const auto noisy = abel::add_noise(clean, 0.1, 1);
  abel::RegularizationConfig cfg;
  cfg.delta = abel::noise_norm(clean, noisy);
  const auto f = abel::half_source(noisy);
  for (auto _ : state) benchmark::DoNotOptimize(abel::choose_alpha(a, f, cfg));
}
BENCHMARK(BM_ChooseAlpha)->Arg(11)->Arg(51)->Arg(201);

void BM_FitSpline(benchmark::State& state) {
  const auto mesh = abel::uniform_mesh(static_cast<std::size_t>(state.range(0)), 1.0);
  const auto q = abel::sample_phantom(kPhantom, mesh).q;
  for (auto _ : state) benchmark::DoNotOptimize(abel::fit_spline(mesh.nodes(), q.values, 0.99));
}
BENCHMARK(BM_FitSpline)->Arg(11)->Arg(101)->Arg(401);

}  // namespace

BENCHMARK_MAIN();
