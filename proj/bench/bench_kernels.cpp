// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "cookie/kernels.hpp"
#include "cookie/pressure.hpp"
#include "cookie/rng.hpp"
#include "cookie/spectrum.hpp"

using namespace cookie;

namespace {

Matrix random_matrix(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  Matrix m(n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) m(j, k) = u(rng);
  return m;
}

Exec exec_of(const benchmark::State& state) { return state.range(1) ? Exec::Parallel : Exec::Serial; }

void BM_AssembleTransfer(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(1);
  const std::vector<Matrix> basis{random_matrix(n, rng), random_matrix(n, rng), random_matrix(n, rng)};
  std::vector<double> coeff(basis.size() * n, 0.5);
  Matrix out(n);
  for (auto _ : state) {
    kernels::assemble_transfer(exec_of(state), basis, coeff, out);
    benchmark::DoNotOptimize(out.data());
  }
}

void BM_Matvec(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(2);
  const Matrix m = random_matrix(n, rng);
  std::vector<double> x(n, 1.0), y(n);
  for (auto _ : state) {
    kernels::matvec(exec_of(state), m, x, y);
    benchmark::DoNotOptimize(y.data());
  }
}

CookieCutterSystem slopes_2_4() {
  return validate_system({BranchSpec::affine(0.0, 0.5), BranchSpec::affine(0.75, 1.0)});
}

void BM_SamplePaths(benchmark::State& state) {
  const auto sys = slopes_2_4();
  const auto cdf = cumulative_weights(std::vector<double>{2.0 / 3.0, 1.0 / 3.0});
  std::vector<double> out(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    if (exec_of(state) == Exec::Parallel)
      kernels::omp::sample_paths(sys, cdf, 10000, 42, out);
    else
      kernels::serial::sample_paths(sys, cdf, 10000, 42, out);
    benchmark::DoNotOptimize(out.data());
  }
}

void BM_VerifyGrid(benchmark::State& state) {
  const auto sys = validate_system({BranchSpec::quadratic(0.0, 0.35, 0.3), BranchSpec::quadratic(0.6, 0.95, -0.2)});
  const auto ev = PressureEvaluator::collocation(sys);
  for (auto _ : state) {
    const auto report = verify_identity(ev, -2.0, 3.0, static_cast<std::size_t>(state.range(0)), 1e-6, {}, exec_of(state));
    benchmark::DoNotOptimize(report.max_residual);
  }
}

}  // namespace

BENCHMARK(BM_AssembleTransfer)->ArgsProduct({{256, 512}, {0, 1}})->ArgNames({"N", "omp"});
BENCHMARK(BM_Matvec)->ArgsProduct({{256, 512}, {0, 1}})->ArgNames({"N", "omp"});
BENCHMARK(BM_SamplePaths)->ArgsProduct({{100}, {0, 1}})->ArgNames({"paths", "omp"})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyGrid)->ArgsProduct({{21}, {0, 1}})->ArgNames({"steps", "omp"})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
