#include "cookie/analysis.hpp"

#include <cmath>
#include <sstream>

#include "cookie/error.hpp"

namespace cookie {

namespace {

std::string format(const char* what, double t, double v) {
  std::ostringstream os;
  os.precision(17);
  os << what << " at t = " << t << " is " << v;
  return os.str();
}

double checked(double v, const char* what, double t) {
  if (!std::isfinite(v)) throw Error(ErrorCode::NonFiniteValue, format(what, t, v));
  return v;
}

}  // namespace

ConvexFunction pressure_function(const PressureEvaluator& evaluator) {
  return {
      [evaluator](double t) { return evaluator.pressure(t); },
      [evaluator](double t) { return evaluator.derivative(t); },
      [evaluator](double t) { return evaluator.second_derivative(t); },
      evaluator.degenerate(),
  };
}

double newton_map(const ConvexFunction& f, double t) {
  const double v = checked(f.value(t), "f", t);
  const double d = checked(f.derivative(t), "f'", t);
  if (d == 0.0) throw Error(ErrorCode::NonFiniteValue, format("f'", t, d));
  return t - v / d;
}

double newton_derivative(const ConvexFunction& f, double t) {
  const double v = checked(f.value(t), "f", t);
  const double d = checked(f.derivative(t), "f'", t);
  double dd = 0.0;
  if (f.second_derivative) {
    dd = f.second_derivative(t);
  } else {
    constexpr double h = 1e-4;
    dd = (f.derivative(t + h) - f.derivative(t - h)) / (2.0 * h);
  }
  checked(dd, "f''", t);
  if (d == 0.0) throw Error(ErrorCode::NonFiniteValue, format("f'", t, d));
  return v * dd / (d * d);
}

RootBracket bracket_root(const ConvexFunction& f, double t0, double cap) {
  for (double r = 1.0; r <= cap; r *= 2.0) {
    const double lo = t0 - r;
    const double hi = t0 + r;
    const double flo = checked(f.value(lo), "f", lo);
    const double fhi = checked(f.value(hi), "f", hi);
    if (flo >= 0.0 && fhi <= 0.0 && flo > fhi) return {lo, hi};
  }
  std::ostringstream os;
  os << "f keeps one sign on [" << t0 - cap << ", " << t0 + cap << "]";
  throw Error(ErrorCode::NoRootBracket, os.str());
}

NewtonTrace newton_solve(const ConvexFunction& f, double t0, double tol, std::size_t max_iter) {
  auto [lo, hi] = bracket_root(f, t0);
  NewtonTrace trace;
  double t = t0;
  double v = checked(f.value(t), "f", t);
  trace.iterates.push_back({t, v});
  if (std::abs(v) < tol) {
    trace.converged = true;
    trace.root = t;
    return trace;
  }
  for (std::size_t k = 0; k < max_iter; ++k) {
    if (v > 0.0) lo = t;
    if (v < 0.0) hi = t;
    double next = newton_map(f, t);
    if (!(next > lo && next < hi)) {
      next = 0.5 * (lo + hi);
      ++trace.bisection_steps;
    }
    const double v_next = checked(f.value(next), "f", next);
    trace.iterates.push_back({next, v_next});
    if (std::abs(v_next) < tol || std::abs(next - t) < tol) {
      trace.converged = true;
      trace.root = next;
      return trace;
    }
    t = next;
    v = v_next;
  }
  trace.root = t;
  throw Error(ErrorCode::MaxIterationsExceeded,
              "Newton iteration did not converge in " + std::to_string(max_iter) + " steps");
}

BowenResult bowen_dimension(const PressureEvaluator& evaluator, double t0, double tol, std::size_t max_iter) {
  auto trace = newton_solve(pressure_function(evaluator), t0, tol, max_iter);
  const double d = trace.root;
  return {d, std::move(trace)};
}

double solve_t_alpha(const ConvexFunction& f, double alpha, const TAlphaOptions& options) {
  if (f.linear) throw Error(ErrorCode::DegeneratePressure, "linear pressure has no unique t_alpha");
  if (!std::isfinite(alpha)) throw Error(ErrorCode::AlphaOutOfRange, format("alpha", 0.0, alpha));
  // g = -f' is decreasing; look for g(lo) > alpha > g(hi).
  auto g = [&f](double t) { return -checked(f.derivative(t), "f'", t); };
  double lo = 0.0;
  double hi = 0.0;
  for (double r = 1.0;; r *= 2.0) {
    if (r > options.bracket_cap) {
      std::ostringstream os;
      os.precision(17);
      os << "alpha = " << alpha << " is not attained by -f' on [-" << options.bracket_cap << ", "
         << options.bracket_cap << "]";
      throw Error(ErrorCode::AlphaOutOfRange, os.str());
    }
    if (g(-r) > alpha && g(r) < alpha) {
      lo = -r;
      hi = r;
      break;
    }
  }
  while (hi - lo >= options.bisect_tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (g(mid) > alpha ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

LegendreResult legendre_transform(const ConvexFunction& f, double alpha, const TAlphaOptions& options) {
  const double t = solve_t_alpha(f, alpha, options);
  const double v = checked(f.value(t), "f", t);
  return {alpha, t, v + alpha * t, -alpha, v};
}

double lemma_rel_residual(const ConvexFunction& f, double alpha, const TAlphaOptions& options) {
  if (alpha == 0.0) throw Error(ErrorCode::InvalidArgument, "alpha must be nonzero");
  const auto leg = legendre_transform(f, alpha, options);
  return std::abs(newton_map(f, leg.t_alpha) - leg.F / alpha);
}

}  // namespace cookie
