#include "cookie/pressure.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "cookie/error.hpp"

namespace cookie {

std::vector<double> chebyshev_nodes(std::size_t n) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "need at least 2 Chebyshev nodes");
  std::vector<double> x(n);
  const double step = std::numbers::pi / (2.0 * static_cast<double>(n - 1));
  for (std::size_t j = 0; j < n; ++j) {
    const double s = std::sin(step * static_cast<double>(j));
    x[j] = s * s;
  }
  return x;
}

std::vector<double> barycentric_weights(std::size_t n) {
  std::vector<double> w(n);
  for (std::size_t j = 0; j < n; ++j) w[j] = (j % 2 == 0) ? 1.0 : -1.0;
  w.front() *= 0.5;
  w.back() *= 0.5;
  return w;
}

void lagrange_row(std::span<const double> nodes, std::span<const double> weights, double y, std::span<double> out) {
  const std::size_t n = nodes.size();
  for (std::size_t k = 0; k < n; ++k) {
    if (y == nodes[k]) {
      std::fill(out.begin(), out.end(), 0.0);
      out[k] = 1.0;
      return;
    }
  }
  double denom = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    out[k] = weights[k] / (y - nodes[k]);
    denom += out[k];
  }
  for (std::size_t k = 0; k < n; ++k) out[k] /= denom;
}

namespace {

void check_nodes(std::size_t nodes) {
  if (nodes < 8) throw Error(ErrorCode::InvalidArgument, "collocation needs at least 8 nodes");
}

/// One interpolation block per branch: row j holds l_k(psi_i(x_j)).
std::vector<Matrix> interpolation_blocks(const CookieCutterSystem& system, std::span<const double> x,
                                         std::span<const double> w) {
  std::vector<Matrix> blocks;
  blocks.reserve(system.size());
  for (const auto& b : system.branches()) {
    Matrix m(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) lagrange_row(x, w, b.inverse(x[j]), m.row(j));
    blocks.push_back(std::move(m));
  }
  return blocks;
}

std::vector<double> log_inverse_derivatives(const CookieCutterSystem& system, std::span<const double> x) {
  std::vector<double> out;
  out.reserve(system.size() * x.size());
  for (const auto& b : system.branches())
    for (double xj : x) out.push_back(std::log(b.inverse_derivative(xj)));
  return out;
}

}  // namespace

Matrix transfer_matrix(const CookieCutterSystem& system, double t, std::size_t nodes) {
  check_nodes(nodes);
  const auto x = chebyshev_nodes(nodes);
  const auto w = barycentric_weights(nodes);
  const auto blocks = interpolation_blocks(system, x, w);
  auto coeff = log_inverse_derivatives(system, x);
  for (double& c : coeff) c = std::exp(t * c);
  Matrix m(nodes);
  kernels::serial::assemble_transfer(blocks, coeff, m);
  return m;
}

Eigenpair leading_eigenvalue(const Matrix& m, double tol, std::size_t max_iter, Exec exec) {
  // Iterates with M + shift*I. The shift stays 0 for the first kBurnIn steps;
  // if that has not converged, it is set to the observed growth rate, which
  // damps eigenvalues near -lambda or lambda*e^{i theta} (orbits of period
  // > 1 dominating at large |t|) without moving the leading eigenvector.
  constexpr std::size_t kBurnIn = 64;
  const std::size_t n = m.rows();
  std::vector<double> v(n, 1.0);
  std::vector<double> u(n);
  double shift = 0.0;
  double previous = std::numeric_limits<double>::quiet_NaN();
  for (std::size_t iter = 1; iter <= max_iter; ++iter) {
    kernels::matvec(exec, m, v, u);
    double vu = 0.0;
    double vv = 0.0;
    double peak = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      u[j] += shift * v[j];
      vu += v[j] * u[j];
      vv += v[j] * v[j];
      if (std::abs(u[j]) > std::abs(peak)) peak = u[j];
    }
    const double rayleigh = vu / vv - shift;
    if (!std::isfinite(rayleigh) || peak == 0.0 || !std::isfinite(peak))
      throw Error(ErrorCode::PowerIterationDiverged, "non-finite iterate after " + std::to_string(iter) + " steps");
    for (std::size_t j = 0; j < n; ++j) v[j] = u[j] / peak;
    if (std::abs(rayleigh - previous) < tol * std::abs(rayleigh)) return {rayleigh, std::move(v), iter};
    previous = rayleigh;
    // v has unit sup norm, so |peak| is the one-step growth of the unshifted iteration.
    if (iter == kBurnIn) shift = std::abs(peak);
  }
  throw Error(ErrorCode::PowerIterationDiverged, "no convergence in " + std::to_string(max_iter) + " iterations");
}

EquilibriumWeights equilibrium_weights(const CookieCutterSystem& system, double t) {
  if (!system.is_affine()) throw Error(ErrorCode::NotAffine, "equilibrium weights need an affine system");
  const auto s = system.slopes();
  std::vector<double> expo(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) expo[i] = -t * std::log(s[i]);
  const double top = *std::max_element(expo.begin(), expo.end());
  double total = 0.0;
  for (double& e : expo) total += e = std::exp(e - top);
  for (double& e : expo) e /= total;
  return {t, std::move(expo)};
}

struct PressureEvaluator::Collocation {
  std::vector<Matrix> blocks;
  std::vector<double> log_dpsi;
};

PressureEvaluator::PressureEvaluator(CookieCutterSystem system, Backend backend, CollocationOptions options)
    : system_(std::move(system)), backend_(backend), options_(options) {}

PressureEvaluator PressureEvaluator::analytic(CookieCutterSystem system) {
  if (!system.is_affine()) throw Error(ErrorCode::NotAffine, "analytic pressure needs an affine system");
  PressureEvaluator ev(std::move(system), Backend::Analytic, {});
  for (double s : ev.system_.slopes()) ev.log_slopes_.push_back(std::log(s));
  return ev;
}

PressureEvaluator PressureEvaluator::collocation(CookieCutterSystem system, CollocationOptions options) {
  check_nodes(options.nodes);
  if (!(options.power_iter_tol > 0.0) || options.power_iter_max < 1)
    throw Error(ErrorCode::InvalidArgument, "power iteration needs tol > 0 and max_iter >= 1");
  PressureEvaluator ev(std::move(system), Backend::Collocation, options);
  const auto x = chebyshev_nodes(options.nodes);
  const auto w = barycentric_weights(options.nodes);
  auto data = std::make_shared<Collocation>();
  data->blocks = interpolation_blocks(ev.system_, x, w);
  data->log_dpsi = log_inverse_derivatives(ev.system_, x);
  ev.collocation_ = std::move(data);
  return ev;
}

double PressureEvaluator::analytic_pressure(double t) const {
  double top = -std::numeric_limits<double>::infinity();
  for (double l : log_slopes_) top = std::max(top, -t * l);
  double total = 0.0;
  for (double l : log_slopes_) total += std::exp(-t * l - top);
  return top + std::log(total);
}

double PressureEvaluator::collocation_pressure(double t) const {
  const auto& data = *collocation_;
  std::vector<double> coeff(data.log_dpsi.size());
  double shift = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < coeff.size(); ++i) shift = std::max(shift, coeff[i] = t * data.log_dpsi[i]);
  for (double& c : coeff) c = std::exp(c - shift);
  Matrix m(options_.nodes);
  kernels::assemble_transfer(options_.exec, data.blocks, coeff, m);
  const auto eig = leading_eigenvalue(m, options_.power_iter_tol, options_.power_iter_max, options_.exec);
  if (!(eig.value > 0.0)) {
    std::ostringstream os;
    os << "leading eigenvalue " << eig.value << " at t = " << t << " is not positive";
    throw Error(ErrorCode::PowerIterationDiverged, os.str());
  }
  return shift + std::log(eig.value);
}

double PressureEvaluator::pressure(double t) const {
  return backend_ == Backend::Analytic ? analytic_pressure(t) : collocation_pressure(t);
}

double PressureEvaluator::derivative(double t) const {
  if (backend_ == Backend::Collocation)
    return richardson_derivative([this](double s) { return collocation_pressure(s); }, t);
  const auto p = equilibrium_weights(system_, t);
  double acc = 0.0;
  for (std::size_t i = 0; i < log_slopes_.size(); ++i) acc += p.weights[i] * log_slopes_[i];
  return -acc;
}

double PressureEvaluator::second_derivative(double t) const {
  if (backend_ == Backend::Collocation) {
    constexpr double h = 1e-3;
    return (derivative(t + h) - derivative(t - h)) / (2.0 * h);
  }
  const auto p = equilibrium_weights(system_, t);
  double mean = 0.0;
  for (std::size_t i = 0; i < log_slopes_.size(); ++i) mean += p.weights[i] * log_slopes_[i];
  double var = 0.0;
  for (std::size_t i = 0; i < log_slopes_.size(); ++i) {
    const double d = log_slopes_[i] - mean;
    var += p.weights[i] * d * d;
  }
  return var;
}

}  // namespace cookie
