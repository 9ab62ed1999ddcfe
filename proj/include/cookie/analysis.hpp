#pragma once

// Newton maps and Legendre transforms of strictly decreasing convex C^2
// functions. Nothing here knows about dynamics; the pressure enters through
// `pressure_function`.

#include <functional>
#include <vector>

#include "cookie/pressure.hpp"

namespace cookie {

struct ConvexFunction {
  std::function<double(double)> value;
  /// Strictly negative and increasing.
  std::function<double(double)> derivative;
  /// Optional; newton_derivative differences `derivative` when absent.
  std::function<double(double)> second_derivative;
  /// Affine f: the Legendre transform collapses to a point.
  bool linear = false;
};

ConvexFunction pressure_function(const PressureEvaluator& evaluator);

/// N_f(t) = t - f(t)/f'(t).
double newton_map(const ConvexFunction& f, double t);
/// N_f'(t) = f(t) f''(t) / f'(t)^2.
double newton_derivative(const ConvexFunction& f, double t);

struct NewtonIterate {
  double t = 0.0;
  double value = 0.0;
};

struct NewtonTrace {
  std::vector<NewtonIterate> iterates;
  bool converged = false;
  double root = 0.0;
  /// Steps where the Newton iterate left the sign-change bracket and a
  /// bisection step was taken instead.
  std::size_t bisection_steps = 0;
};

struct RootBracket {
  double lo = 0.0;  // f(lo) > 0
  double hi = 0.0;  // f(hi) < 0
};

/// Expands [t0 - 1, t0 + 1] by doubling its half-width until f changes sign;
/// throws NoRootBracket once the half-width exceeds `cap`.
RootBracket bracket_root(const ConvexFunction& f, double t0, double cap = 1e3);

/// Newton iteration from t0, safeguarded by the sign-change bracket. Stops
/// when |f(t_k)| < tol or |t_{k+1} - t_k| < tol.
NewtonTrace newton_solve(const ConvexFunction& f, double t0, double tol, std::size_t max_iter);

struct BowenResult {
  double dimension = 0.0;
  NewtonTrace trace;
};

/// Root of t -> P(-t log|T'|), i.e. the Hausdorff dimension of the repeller.
BowenResult bowen_dimension(const PressureEvaluator& evaluator, double t0 = 1.0, double tol = 1e-13,
                            std::size_t max_iter = 100);

struct TAlphaOptions {
  double bisect_tol = 1e-12;
  double bracket_cap = 1e3;
};

/// The unique t with f'(t) = -alpha, by bracket expansion from [-1, 1] and
/// bisection on the monotone derivative.
double solve_t_alpha(const ConvexFunction& f, double alpha, const TAlphaOptions& options = {});

struct LegendreResult {
  double alpha = 0.0;
  double t_alpha = 0.0;
  /// inf_t f(t) + alpha t, the intercept of the support line S_alpha.
  double F = 0.0;
  /// Slope of S_alpha, i.e. -alpha.
  double slope = 0.0;
  double value_at_t_alpha = 0.0;

  /// S_alpha(t) = -alpha (t - t_alpha) + f(t_alpha).
  double support_line(double t) const { return slope * (t - t_alpha) + value_at_t_alpha; }
};

LegendreResult legendre_transform(const ConvexFunction& f, double alpha, const TAlphaOptions& options = {});

/// |N_f(t_alpha) - F(alpha)/alpha|.
double lemma_rel_residual(const ConvexFunction& f, double alpha, const TAlphaOptions& options = {});

}  // namespace cookie
