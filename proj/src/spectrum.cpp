#include "cookie/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "cookie/error.hpp"

namespace cookie {

std::vector<double> linear_grid(double lo, double hi, std::size_t steps) {
  std::vector<double> grid(steps);
  if (steps == 1) {
    grid[0] = lo;
    return grid;
  }
  const double step = (hi - lo) / static_cast<double>(steps - 1);
  for (std::size_t k = 0; k < steps; ++k) grid[k] = lo + step * static_cast<double>(k);
  if (steps > 1) grid.back() = hi;
  return grid;
}

double default_identity_tolerance(Backend backend) { return backend == Backend::Analytic ? 1e-10 : 1e-6; }

AlphaRange alpha_range(const PressureEvaluator& evaluator) {
  if (evaluator.backend() == Backend::Analytic) {
    const auto s = evaluator.system().slopes();
    const auto [lo, hi] = std::minmax_element(s.begin(), s.end());
    return {std::log(*lo), std::log(*hi), false};
  }
  return {-evaluator.derivative(kCollocationSaturationT), -evaluator.derivative(-kCollocationSaturationT), true};
}

SpectrumPoint lyapunov_spectrum(const PressureEvaluator& evaluator, double alpha, const TAlphaOptions& options) {
  if (evaluator.degenerate())
    throw Error(ErrorCode::DegeneratePressure, "equal-slope affine system has a one-point spectrum");
  {
    // Collocation: the +-60 saturation range, so t_alpha stays where the
    // eigenproblem is well conditioned.
    const auto range = alpha_range(evaluator);
    if (!(alpha > range.alpha_min && alpha < range.alpha_max)) {
      std::ostringstream os;
      os.precision(17);
      os << "alpha = " << alpha << " is outside (" << range.alpha_min << ", " << range.alpha_max << ")";
      throw Error(ErrorCode::AlphaOutOfRange, os.str());
    }
  }
  const auto f = pressure_function(evaluator);
  const double t = solve_t_alpha(f, alpha, options);
  SpectrumPoint p;
  p.alpha = alpha;
  p.t_alpha = t;
  p.entropy = evaluator.pressure(t) + t * alpha;
  p.L = p.entropy / alpha;
  p.newton_value = newton_map(f, t);
  return p;
}

SpectrumCurve spectrum_curve(const PressureEvaluator& evaluator, std::size_t steps, double margin,
                             const TAlphaOptions& options, Exec exec) {
  if (steps < 2) throw Error(ErrorCode::InvalidArgument, "spectrum curve needs at least 2 steps");
  if (!(margin > 0.0 && margin < 0.5)) throw Error(ErrorCode::InvalidArgument, "margin must lie in (0, 1/2)");
  if (evaluator.degenerate()) {
    const auto& sys = evaluator.system();
    const double log_s = std::log(sys.branch(0).slope());
    const double log_n = std::log(static_cast<double>(sys.size()));
    const double d = log_n / log_s;
    return {{{log_s, std::numeric_limits<double>::quiet_NaN(), d, d, log_n}}, true};
  }
  const auto range = alpha_range(evaluator);
  const double w = range.width();
  const auto grid = linear_grid(range.alpha_min + margin * w, range.alpha_max - margin * w, steps);
  auto points = kernels::map_to<SpectrumPoint>(
      exec, grid.size(), [&](std::size_t k) { return lyapunov_spectrum(evaluator, grid[k], options); });
  return {std::move(points), false};
}

IdentityReport verify_identity(const PressureEvaluator& evaluator, double t_min, double t_max, std::size_t steps,
                               double tol, const TAlphaOptions& options, Exec exec) {
  if (evaluator.degenerate())
    throw Error(ErrorCode::DegeneratePressure, "identity check needs a strictly convex pressure");
  if (steps < 2) throw Error(ErrorCode::InvalidArgument, "identity check needs at least 2 steps");
  if (!(t_min < t_max)) throw Error(ErrorCode::InvalidArgument, "need t_min < t_max");
  IdentityReport report;
  report.t_grid = linear_grid(t_min, t_max, steps);
  report.tolerance = tol;
  const auto f = pressure_function(evaluator);
  report.residuals = kernels::map_to<double>(exec, steps, [&](std::size_t k) {
    const double t = report.t_grid[k];
    const double alpha = -evaluator.derivative(t);
    const auto point = lyapunov_spectrum(evaluator, alpha, options);
    return std::abs(point.L - newton_map(f, t));
  });
  for (double r : report.residuals)
    report.max_residual = std::isnan(r) ? std::numeric_limits<double>::infinity() : std::max(report.max_residual, r);
  report.pass = report.max_residual <= tol;
  return report;
}

double equilibrium_entropy(const PressureEvaluator& evaluator, double t) {
  return evaluator.pressure(t) - t * evaluator.derivative(t);
}

}  // namespace cookie
