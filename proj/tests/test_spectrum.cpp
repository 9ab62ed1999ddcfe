#include <doctest.h>

#include <random>

#include "cookie/spectrum.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace cookie;
using namespace cookie::testing;

namespace {

PressureEvaluator ev_2_4() { return PressureEvaluator::analytic(slopes_2_4()); }

double mean_of(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m += x;
  return m / static_cast<double>(v.size());
}

double standard_error(const std::vector<double>& v) {
  const double m = mean_of(v);
  double ss = 0.0;
  for (double x : v) ss += (x - m) * (x - m);
  const double n = static_cast<double>(v.size());
  return std::sqrt(ss / (n - 1.0) / n);
}

}  // namespace

TEST_CASE("alpha_range of affine systems") {
  const auto r = alpha_range(ev_2_4());
  CHECK_CLOSE(r.alpha_min, kLog2, 1e-15);
  CHECK_CLOSE(r.alpha_max, kLog4, 1e-15);
  CHECK_FALSE(r.approximate);
  const auto c = alpha_range(PressureEvaluator::analytic(cantor()));
  CHECK_CLOSE(c.alpha_min, kLog3, 1e-14);
  CHECK_CLOSE(c.alpha_max, kLog3, 1e-14);
}

TEST_CASE("alpha_range of the nonlinear system") {
  const auto sys = quadratic_system();
  const auto r = alpha_range(PressureEvaluator::collocation(sys));
  CHECK(r.approximate);
  // Both branches have base width 0.35.
  const double base = std::log(1.0 / 0.35);
  CHECK(r.alpha_min < base);
  CHECK(r.alpha_max > base);
  double lo = std::numeric_limits<double>::infinity();
  double hi = 0.0;
  for (const auto& b : sys.branches()) {
    for (double y = 0.0; y <= 1.0; y += 1e-3) {
      const double l = std::log(sys.derivative(b.inverse(y)));
      lo = std::min(lo, l);
      hi = std::max(hi, l);
    }
  }
  CHECK(r.alpha_min >= lo - 1e-9);
  CHECK(r.alpha_max <= hi + 1e-9);
}

TEST_CASE("lyapunov_spectrum examples") {
  const auto p0 = lyapunov_spectrum(ev_2_4(), 1.5 * kLog2);
  CHECK_CLOSE(p0.t_alpha, 0.0, 1e-11);
  CHECK_CLOSE(p0.L, 2.0 / 3.0, 1e-11);

  const auto p1 = lyapunov_spectrum(ev_2_4(), 4.0 / 3.0 * kLog2);
  CHECK_CLOSE(p1.L, 0.6887218755408672, 1e-11);

  const double d = oracle::dimension_slopes_2_4();
  const auto pd = lyapunov_spectrum(ev_2_4(), -ev_2_4().derivative(d));
  CHECK_CLOSE(pd.L, d, 1e-9);
  CHECK_CLOSE(pd.newton_value, d, 1e-9);

  CHECK_ERROR(ErrorCode::AlphaOutOfRange, lyapunov_spectrum(ev_2_4(), 2.0));
  CHECK_ERROR(ErrorCode::AlphaOutOfRange, lyapunov_spectrum(ev_2_4(), kLog2));
  CHECK_ERROR(ErrorCode::DegeneratePressure, lyapunov_spectrum(PressureEvaluator::analytic(cantor()), kLog3));
  CHECK_ERROR(ErrorCode::AlphaOutOfRange, lyapunov_spectrum(PressureEvaluator::collocation(quadratic_system()), 0.5));
}

TEST_CASE("spectrum_curve examples") {
  const double d = oracle::dimension_slopes_2_4();
  const auto curve = spectrum_curve(ev_2_4(), 3, 0.01);
  CHECK_FALSE(curve.degenerate);
  REQUIRE(curve.points.size() == 3);
  CHECK_CLOSE(curve.points[1].alpha, 1.5 * kLog2, 1e-12);
  for (const auto& p : curve.points) {
    CHECK(p.L > 0.0);
    CHECK(p.L <= d + 1e-9);
  }

  const auto c = spectrum_curve(PressureEvaluator::analytic(cantor()), 101, 1e-3);
  CHECK(c.degenerate);
  REQUIRE(c.points.size() == 1);
  CHECK_CLOSE(c.points[0].alpha, kLog3, 1e-14);
  CHECK(std::isnan(c.points[0].t_alpha));
  CHECK_CLOSE(c.points[0].L, kLog2 / kLog3, 1e-14);

  CHECK_ERROR(ErrorCode::InvalidArgument, spectrum_curve(ev_2_4(), 1, 0.01));
  CHECK_ERROR(ErrorCode::InvalidArgument, spectrum_curve(ev_2_4(), 10, 0.5));
  CHECK_ERROR(ErrorCode::InvalidArgument, spectrum_curve(ev_2_4(), 10, 0.0));
}

TEST_CASE("spectrum maximum equals the dimension") {
  std::mt19937_64 rng(31);
  std::vector<CookieCutterSystem> systems{slopes_2_4()};
  for (int k = 0; k < 5; ++k) systems.push_back(random_affine(rng, 2 + rng() % 4));
  for (const auto& sys : systems) {
    const auto ev = PressureEvaluator::analytic(sys);
    const double d = bowen_dimension(ev).dimension;
    const auto curve = spectrum_curve(ev, 401, 1e-3);
    double best = 0.0;
    for (const auto& p : curve.points) {
      CHECK(p.L <= d + 1e-9);
      CHECK(p.L >= 0.0);
      best = std::max(best, p.L);
    }
    CHECK(best >= d - 1e-4);
    CHECK_CLOSE(lyapunov_spectrum(ev, -ev.derivative(d)).L, d, 1e-9);
  }
}

TEST_CASE("spectrum entropy field is consistent") {
  for (const auto& p : spectrum_curve(ev_2_4(), 51, 1e-3).points) {
    CHECK_CLOSE(p.entropy, equilibrium_entropy(ev_2_4(), p.t_alpha), 1e-10);
    CHECK(p.L == p.entropy / p.alpha);
    CHECK(std::abs(p.entropy - p.alpha * p.L) <= 1e-15 * std::abs(p.entropy));
  }
}

TEST_CASE("spectrum decays toward the endpoints") {
  const auto r = alpha_range(ev_2_4());
  double previous = std::numeric_limits<double>::infinity();
  for (double margin : {1e-2, 1e-3, 1e-4, 1e-5}) {
    const double L = lyapunov_spectrum(ev_2_4(), r.alpha_min + margin * r.width()).L;
    if (margin <= 1e-3) CHECK(L <= 0.05);
    CHECK(L < previous);
    previous = L;
  }
}

TEST_CASE("spectrum matches the infimum formula taken literally") {
  constexpr double lo = -20.0;
  constexpr double step = 1e-4;
  std::mt19937_64 rng(32);
  std::vector<CookieCutterSystem> systems{slopes_2_4(), random_affine(rng, 3), random_affine(rng, 4)};
  for (const auto& sys : systems) {
    const auto ev = PressureEvaluator::analytic(sys);
    const auto table = oracle::tabulate([&](double t) { return ev.pressure(t); }, lo, 20.0, step);
    for (const auto& p : spectrum_curve(ev, 9, 0.05).points)
      CHECK_CLOSE(p.L, oracle::grid_inf(table, lo, step, p.alpha) / p.alpha, 1e-6);
  }
}

TEST_CASE("verify_identity examples") {
  const auto report = verify_identity(ev_2_4(), -2.0, 3.0, 101, 1e-10);
  CHECK(report.pass);
  CHECK(report.t_grid.size() == 101);
  CHECK(report.max_residual <= 1e-10);

  const double d = oracle::dimension_slopes_2_4();
  const auto at_d = verify_identity(ev_2_4(), d, d + 1e-9, 2, 1e-10);
  CHECK(at_d.pass);
  CHECK_CLOSE(newton_map(pressure_function(ev_2_4()), d), d, 1e-12);

  CHECK_ERROR(ErrorCode::DegeneratePressure, verify_identity(PressureEvaluator::analytic(cantor()), -2, 3, 11, 1e-10));
  CHECK_ERROR(ErrorCode::InvalidArgument, verify_identity(ev_2_4(), 3, -2, 11, 1e-10));
  const auto strict = verify_identity(ev_2_4(), -2.0, 3.0, 11, 0.0);
  CHECK(strict.pass == (strict.max_residual == 0.0));
}

TEST_CASE("verify_identity passes on random affine systems") {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 50; ++trial) {
    const auto sys = random_affine(rng, 2 + rng() % 4);
    if (sys.is_affine_degenerate()) continue;
    const auto report = verify_identity(PressureEvaluator::analytic(sys), -2.0, 3.0, 41, 1e-10);
    CHECK(report.max_residual <= 1e-10);
  }
}

TEST_CASE("verify_identity on the nonlinear system") {
  const auto report = verify_identity(PressureEvaluator::collocation(quadratic_system()), -2.0, 3.0, 11, 1e-6);
  CHECK(report.pass);
}

TEST_CASE("verify_identity is independent of execution mode") {
  const auto a = verify_identity(ev_2_4(), -2.0, 3.0, 21, 1e-10, {}, Exec::Serial);
  const auto b = verify_identity(ev_2_4(), -2.0, 3.0, 21, 1e-10, {}, Exec::Parallel);
  CHECK(a.residuals == b.residuals);
}

TEST_CASE("equilibrium_entropy examples") {
  CHECK_CLOSE(equilibrium_entropy(ev_2_4(), 0.0), kLog2, 1e-15);
  CHECK_CLOSE(equilibrium_entropy(PressureEvaluator::collocation(quadratic_system()), 0.0), kLog2, 1e-10);
  CHECK_CLOSE(equilibrium_entropy(ev_2_4(), 1.0), std::log(0.75) + 4.0 / 3.0 * kLog2, 1e-14);
  const double d = oracle::dimension_slopes_2_4();
  CHECK_CLOSE(equilibrium_entropy(ev_2_4(), d), -d * ev_2_4().derivative(d), 1e-14);
  for (double t = -3.0; t <= 5.0; t += 0.5) {
    const double h = equilibrium_entropy(ev_2_4(), t);
    CHECK(h >= 0.0);
    CHECK(h <= kLog2 + 1e-15);
  }
}

TEST_CASE("Monte-Carlo exponents concentrate at -P'(t)") {
  const auto sys = slopes_2_4();
  const auto ev = PressureEvaluator::analytic(sys);
  for (double t : {-1.0, 0.0, 1.0, 2.5}) {
    const auto w = equilibrium_weights(sys, t);
    const auto samples = sample_lyapunov(sys, w.weights, 2000, 60, 7);
    CHECK(std::abs(mean_of(samples) + ev.derivative(t)) <= 3.0 * standard_error(samples));
  }
}
