#pragma once

// Lyapunov spectrum L(alpha) = (P(t_alpha) + t_alpha alpha) / alpha and the
// check L(-P'(t)) = N_P(t).

#include <vector>

#include "cookie/analysis.hpp"
#include "cookie/pressure.hpp"

namespace cookie {

struct AlphaRange {
  double alpha_min = 0.0;
  double alpha_max = 0.0;
  /// Collocation ranges come from -P'(+-60) and are saturation estimates.
  bool approximate = false;
  double width() const { return alpha_max - alpha_min; }
};

struct SpectrumPoint {
  double alpha = 0.0;
  double t_alpha = 0.0;  // NaN for the degenerate one-point spectrum
  double L = 0.0;
  double newton_value = 0.0;
  double entropy = 0.0;
};

struct SpectrumCurve {
  std::vector<SpectrumPoint> points;
  bool degenerate = false;
};

struct IdentityReport {
  std::vector<double> t_grid;
  std::vector<double> residuals;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

inline constexpr double kCollocationSaturationT = 60.0;

AlphaRange alpha_range(const PressureEvaluator& evaluator);

SpectrumPoint lyapunov_spectrum(const PressureEvaluator& evaluator, double alpha,
                                const TAlphaOptions& options = {});

/// Uniform alpha grid over [alpha_min + margin w, alpha_max - margin w].
/// Degenerate systems yield the single flagged point (log s, nan, log n / log s).
SpectrumCurve spectrum_curve(const PressureEvaluator& evaluator, std::size_t steps, double margin,
                             const TAlphaOptions& options = {}, Exec exec = Exec::Parallel);

/// For each grid t: alpha = -P'(t), L(alpha) with t_alpha re-solved from
/// alpha, and N_P(t); residual |L - N_P|.
IdentityReport verify_identity(const PressureEvaluator& evaluator, double t_min, double t_max, std::size_t steps,
                               double tol, const TAlphaOptions& options = {}, Exec exec = Exec::Parallel);

/// h(mu_t) = P(t) - t P'(t).
double equilibrium_entropy(const PressureEvaluator& evaluator, double t);

/// Default identity tolerance for the backend: 1e-10 analytic, 1e-6 collocation.
double default_identity_tolerance(Backend backend);

/// `steps` evenly spaced points from lo to hi inclusive (steps == 1 gives lo).
std::vector<double> linear_grid(double lo, double hi, std::size_t steps);

}  // namespace cookie
