#pragma once

// Data-parallel kernels. Each kernel has a serial reference in
// `kernels::serial` and an OpenMP version in `kernels::omp`; both produce
// bit-identical output (no parallel reductions).

#include <cstddef>
#include <cstdint>
#include <exception>
#include <span>
#include <vector>

#include "cookie/system.hpp"

namespace cookie {

/// Dense row-major square matrix.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t n, double fill = 0.0) : n_(n), data_(n * n, fill) {}

  std::size_t rows() const { return n_; }
  double& operator()(std::size_t r, std::size_t c) { return data_[r * n_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * n_ + c]; }
  std::span<double> row(std::size_t r) { return {data_.data() + r * n_, n_}; }
  std::span<const double> row(std::size_t r) const { return {data_.data() + r * n_, n_}; }
  std::span<const double> data() const { return data_; }

  static Matrix identity(std::size_t n) {
    Matrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

 private:
  std::size_t n_ = 0;
  std::vector<double> data_;
};

namespace kernels {

/// out[j][k] = sum_i coeff[i*N + j] * basis[i](j, k)
/// basis holds one N x N interpolation block per branch.
namespace serial {
void assemble_transfer(std::span<const Matrix> basis, std::span<const double> coeff, Matrix& out);
void matvec(const Matrix& m, std::span<const double> x, std::span<double> y);
void sample_paths(const CookieCutterSystem& system, std::span<const double> cdf, std::size_t path_length,
                  std::uint64_t seed, std::span<double> out);
}  // namespace serial

namespace omp {
void assemble_transfer(std::span<const Matrix> basis, std::span<const double> coeff, Matrix& out);
void matvec(const Matrix& m, std::span<const double> x, std::span<double> y);
void sample_paths(const CookieCutterSystem& system, std::span<const double> cdf, std::size_t path_length,
                  std::uint64_t seed, std::span<double> out);
}  // namespace omp

inline void assemble_transfer(Exec exec, std::span<const Matrix> basis, std::span<const double> coeff,
                              Matrix& out) {
  exec == Exec::Parallel ? omp::assemble_transfer(basis, coeff, out)
                         : serial::assemble_transfer(basis, coeff, out);
}

inline void matvec(Exec exec, const Matrix& m, std::span<const double> x, std::span<double> y) {
  exec == Exec::Parallel ? omp::matvec(m, x, y) : serial::matvec(m, x, y);
}

/// Birkhoff average of the word drawn for one path; shared by both sample kernels.
double sample_path(const CookieCutterSystem& system, std::span<const double> cdf, std::size_t path_length,
                   std::uint64_t seed, std::uint64_t path, std::vector<std::uint32_t>& scratch);

/// out[i] = fn(i) for i in [0, n). The first exception thrown by any index is
/// rethrown on the calling thread.
template <class T, class Fn>
std::vector<T> map_to(Exec exec, std::size_t n, Fn&& fn) {
  std::vector<T> out(n);
  const auto count = static_cast<std::ptrdiff_t>(n);
  if (exec == Exec::Serial) {
    for (std::ptrdiff_t i = 0; i < count; ++i) out[i] = fn(static_cast<std::size_t>(i));
    return out;
  }
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    try {
      out[i] = fn(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(cookie_map_to)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

}  // namespace kernels
}  // namespace cookie
