#include <doctest.h>
#include <omp.h>

#include <random>
#include <stdexcept>

#include "cookie/kernels.hpp"
#include "cookie/pressure.hpp"
#include "cookie/rng.hpp"
#include "fixtures.hpp"

using namespace cookie;
using namespace cookie::testing;

namespace {

struct ForceThreads {
  ForceThreads() { omp_set_num_threads(4); }
} force_threads;

Matrix random_matrix(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Matrix m(n);
  for (std::size_t r = 0; r < n; ++r)
    for (auto& x : m.row(r)) x = u(rng);
  return m;
}

}  // namespace

TEST_CASE("serial and OpenMP matvec agree bit for bit") {
  std::mt19937_64 rng(1);
  for (std::size_t n : {1u, 7u, 64u, 257u}) {
    const auto m = random_matrix(n, rng);
    std::vector<double> x(n), y1(n), y2(n);
    for (auto& v : x) v = std::uniform_real_distribution<double>(-1, 1)(rng);
    kernels::serial::matvec(m, x, y1);
    kernels::omp::matvec(m, x, y2);
    CHECK(y1 == y2);
  }
}

TEST_CASE("serial and OpenMP transfer assembly agree bit for bit") {
  std::mt19937_64 rng(2);
  const std::size_t n = 48;
  std::vector<Matrix> blocks{random_matrix(n, rng), random_matrix(n, rng), random_matrix(n, rng)};
  std::vector<double> coeff(3 * n);
  for (auto& c : coeff) c = std::uniform_real_distribution<double>(0, 2)(rng);
  Matrix a(n), b(n);
  kernels::serial::assemble_transfer(blocks, coeff, a);
  kernels::omp::assemble_transfer(blocks, coeff, b);
  CHECK(std::equal(a.data().begin(), a.data().end(), b.data().begin()));

  // Spot check one entry against the definition.
  double expected = 0.0;
  for (std::size_t i = 0; i < 3; ++i) expected += coeff[i * n + 5] * blocks[i](5, 11);
  CHECK(a(5, 11) == doctest::Approx(expected).epsilon(1e-15));
}

TEST_CASE("collocation pressure does not depend on kernel execution mode") {
  CollocationOptions serial;
  CollocationOptions parallel;
  parallel.exec = Exec::Parallel;
  const auto a = PressureEvaluator::collocation(quadratic_system(), serial);
  const auto b = PressureEvaluator::collocation(quadratic_system(), parallel);
  for (double t : {-1.5, 0.0, 0.7, 2.5}) CHECK(a.pressure(t) == b.pressure(t));
}

TEST_CASE("map_to preserves order and rethrows") {
  const auto out = kernels::map_to<double>(Exec::Parallel, 1000, [](std::size_t i) { return 2.0 * i; });
  for (std::size_t i = 0; i < out.size(); ++i) CHECK(out[i] == 2.0 * i);

  auto throwing = [](std::size_t i) -> double {
    if (i == 17) throw std::runtime_error("boom");
    return 0.0;
  };
  CHECK_THROWS_AS(kernels::map_to<double>(Exec::Parallel, 100, throwing), std::runtime_error);
  CHECK_THROWS_AS(kernels::map_to<double>(Exec::Serial, 100, throwing), std::runtime_error);
}

TEST_CASE("path streams are deterministic and distinct") {
  PathRng a(42, 3), b(42, 3), c(42, 4), d(43, 3);
  for (int k = 0; k < 10; ++k) {
    const double x = a.uniform();
    CHECK(x == b.uniform());
    CHECK(x >= 0.0);
    CHECK(x < 1.0);
  }
  CHECK(PathRng(42, 3).uniform() != c.uniform());
  CHECK(PathRng(42, 3).uniform() != d.uniform());
}

TEST_CASE("inverse-CDF symbol draws") {
  const std::vector<double> w{0.25, 0.0, 0.75};
  const auto cdf = cumulative_weights(w);
  CHECK(cdf.back() == 1.0);
  CHECK(draw_symbol(cdf, 0.0) == 0);
  CHECK(draw_symbol(cdf, 0.2499) == 0);
  CHECK(draw_symbol(cdf, 0.25) == 2);  // zero-weight symbol never drawn
  CHECK(draw_symbol(cdf, 0.9999999) == 2);

  // Empirical frequencies.
  PathRng rng(9, 0);
  std::vector<int> counts(3, 0);
  for (int k = 0; k < 100000; ++k) ++counts[draw_symbol(cdf, rng.uniform())];
  CHECK(counts[1] == 0);
  CHECK(std::abs(counts[0] / 100000.0 - 0.25) < 0.01);
}
