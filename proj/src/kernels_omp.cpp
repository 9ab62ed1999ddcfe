#include <algorithm>

#include "cookie/kernels.hpp"

namespace cookie::kernels::omp {

void assemble_transfer(std::span<const Matrix> basis, std::span<const double> coeff, Matrix& out) {
  const auto n = static_cast<std::ptrdiff_t>(out.rows());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t j = 0; j < n; ++j) {
    auto row = out.row(j);
    std::fill(row.begin(), row.end(), 0.0);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      const double c = coeff[i * n + j];
      const auto b = basis[i].row(j);
      for (std::ptrdiff_t k = 0; k < n; ++k) row[k] += c * b[k];
    }
  }
}

void matvec(const Matrix& m, std::span<const double> x, std::span<double> y) {
  const auto n = static_cast<std::ptrdiff_t>(m.rows());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t j = 0; j < n; ++j) {
    const auto r = m.row(j);
    double acc = 0.0;
    for (std::ptrdiff_t k = 0; k < n; ++k) acc += r[k] * x[k];
    y[j] = acc;
  }
}

void sample_paths(const CookieCutterSystem& system, std::span<const double> cdf, std::size_t path_length,
                  std::uint64_t seed, std::span<double> out) {
  const auto paths = static_cast<std::ptrdiff_t>(out.size());
#pragma omp parallel
  {
    std::vector<std::uint32_t> scratch;
#pragma omp for schedule(dynamic)
    for (std::ptrdiff_t p = 0; p < paths; ++p)
      out[p] = sample_path(system, cdf, path_length, seed, static_cast<std::uint64_t>(p), scratch);
  }
}

}  // namespace cookie::kernels::omp
