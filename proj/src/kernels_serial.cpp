#include "cookie/kernels.hpp"
#include "cookie/rng.hpp"

namespace cookie::kernels {

double sample_path(const CookieCutterSystem& system, std::span<const double> cdf, std::size_t path_length,
                   std::uint64_t seed, std::uint64_t path, std::vector<std::uint32_t>& scratch) {
  PathRng rng(seed, path);
  scratch.resize(path_length);
  for (auto& s : scratch) s = draw_symbol(cdf, rng.uniform());
  return birkhoff_lyapunov(system, std::span<const std::uint32_t>(scratch));
}

namespace serial {

void assemble_transfer(std::span<const Matrix> basis, std::span<const double> coeff, Matrix& out) {
  const std::size_t n = out.rows();
  for (std::size_t j = 0; j < n; ++j) {
    auto row = out.row(j);
    std::fill(row.begin(), row.end(), 0.0);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      const double c = coeff[i * n + j];
      const auto b = basis[i].row(j);
      for (std::size_t k = 0; k < n; ++k) row[k] += c * b[k];
    }
  }
}

void matvec(const Matrix& m, std::span<const double> x, std::span<double> y) {
  const std::size_t n = m.rows();
  for (std::size_t j = 0; j < n; ++j) {
    const auto r = m.row(j);
    double acc = 0.0;
    for (std::size_t k = 0; k < n; ++k) acc += r[k] * x[k];
    y[j] = acc;
  }
}

void sample_paths(const CookieCutterSystem& system, std::span<const double> cdf, std::size_t path_length,
                  std::uint64_t seed, std::span<double> out) {
  std::vector<std::uint32_t> scratch;
  for (std::size_t p = 0; p < out.size(); ++p) out[p] = sample_path(system, cdf, path_length, seed, p, scratch);
}

}  // namespace serial
}  // namespace cookie::kernels
