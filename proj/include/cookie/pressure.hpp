#pragma once

// f(t) := P(-t log|T'|) and its derivative.
//
// Analytic backend (all-affine systems): f(t) = log sum_i s_i^{-t}.
// Collocation backend: f(t) = log of the leading eigenvalue of the transfer
// operator (L_t g)(x) = sum_i psi_i'(x)^t g(psi_i(x)), discretised by
// barycentric Lagrange interpolation at Chebyshev points of the second kind.

#include <memory>
#include <vector>

#include "cookie/kernels.hpp"
#include "cookie/system.hpp"

namespace cookie {

enum class Backend { Analytic, Collocation };

struct CollocationOptions {
  std::size_t nodes = 64;
  double power_iter_tol = 1e-13;
  std::size_t power_iter_max = 10000;
  /// Parallelism of the matrix kernels. Grid-level callers already run
  /// evaluations concurrently, so this defaults to serial.
  Exec exec = Exec::Serial;
};

struct Eigenpair {
  double value = 0.0;
  std::vector<double> vector;
  std::size_t iterations = 0;
};

/// Chebyshev points of the second kind on [0,1], x_j = sin^2(pi j / (2(N-1))).
std::vector<double> chebyshev_nodes(std::size_t n);
/// Barycentric weights for chebyshev_nodes: (-1)^j, halved at both ends.
std::vector<double> barycentric_weights(std::size_t n);
/// Row (l_0(y), ..., l_{N-1}(y)) of the Lagrange basis at y.
void lagrange_row(std::span<const double> nodes, std::span<const double> weights, double y, std::span<double> out);

/// Collocation matrix M[j][k] = sum_i psi_i'(x_j)^t l_k(psi_i(x_j)).
Matrix transfer_matrix(const CookieCutterSystem& system, double t, std::size_t nodes);

/// Power iteration from the all-ones vector with sup-norm normalisation; a
/// positive shift is applied after a burn-in if the plain iteration stalls.
/// Stops when successive Rayleigh quotients agree to tol (relative).
Eigenpair leading_eigenvalue(const Matrix& m, double tol, std::size_t max_iter, Exec exec = Exec::Serial);

struct EquilibriumWeights {
  double t = 0.0;
  std::vector<double> weights;
};

/// Bernoulli equilibrium measure p_i(t) = s_i^{-t} / sum_j s_j^{-t}.
EquilibriumWeights equilibrium_weights(const CookieCutterSystem& system, double t);

class PressureEvaluator {
 public:
  static PressureEvaluator analytic(CookieCutterSystem system);
  static PressureEvaluator collocation(CookieCutterSystem system, CollocationOptions options = {});

  double pressure(double t) const;
  /// Analytic backend: exact. Collocation: central difference with
  /// h = 1e-3 and one Richardson level.
  double derivative(double t) const;
  /// Central difference of the numeric derivative with h = 1e-3; the
  /// analytic backend returns the exact variance of log s_i.
  double second_derivative(double t) const;

  Backend backend() const { return backend_; }
  const CookieCutterSystem& system() const { return system_; }
  const CollocationOptions& options() const { return options_; }
  bool degenerate() const { return system_.is_affine_degenerate(); }

 private:
  struct Collocation;

  PressureEvaluator(CookieCutterSystem system, Backend backend, CollocationOptions options);

  double analytic_pressure(double t) const;
  double collocation_pressure(double t) const;

  CookieCutterSystem system_;
  Backend backend_;
  CollocationOptions options_;
  std::vector<double> log_slopes_;
  std::shared_ptr<const Collocation> collocation_;
};

/// Richardson-extrapolated central difference (4 D_{h/2} - D_h) / 3.
template <class F>
double richardson_derivative(F&& f, double t, double h = 1e-3) {
  const double d_h = (f(t + h) - f(t - h)) / (2.0 * h);
  const double d_half = (f(t + 0.5 * h) - f(t - 0.5 * h)) / h;
  return (4.0 * d_half - d_h) / 3.0;
}

}  // namespace cookie
