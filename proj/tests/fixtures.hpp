#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <random>
#include <string>

#include "cookie/system.hpp"

namespace cookie::testing {

inline const double kLog2 = std::numbers::ln2;
inline const double kLog3 = std::log(3.0);
inline const double kLog4 = std::log(4.0);

inline CookieCutterSystem cantor() {
  return validate_system({BranchSpec::affine(0.0, 1.0 / 3.0), BranchSpec::affine(2.0 / 3.0, 1.0)});
}

/// Slopes 2 and 4.
inline CookieCutterSystem slopes_2_4() {
  return validate_system({BranchSpec::affine(0.0, 0.5), BranchSpec::affine(0.75, 1.0)});
}

inline CookieCutterSystem quadratic_system() {
  return validate_system({BranchSpec::quadratic(0.0, 0.35, 0.3), BranchSpec::quadratic(0.6, 0.95, -0.2)});
}

/// Affine system with n branches and slopes in [lo, hi], placed with random
/// strictly positive gaps.
inline CookieCutterSystem random_affine(std::mt19937_64& rng, std::size_t n, double lo = 1.5, double hi = 8.0) {
  std::uniform_real_distribution<double> slope(lo, hi);
  std::vector<double> widths(n);
  for (;;) {
    double total = 0.0;
    for (auto& w : widths) total += w = 1.0 / slope(rng);
    if (total < 0.95) break;
  }
  double total = 0.0;
  for (double w : widths) total += w;
  // n+1 gaps sharing the slack, all positive.
  std::uniform_real_distribution<double> share(0.1, 1.0);
  std::vector<double> gaps(n + 1);
  double gsum = 0.0;
  for (auto& g : gaps) gsum += g = share(rng);
  const double slack = 1.0 - total;
  std::vector<BranchSpec> specs;
  double x = gaps[0] / gsum * slack;
  for (std::size_t i = 0; i < n; ++i) {
    specs.push_back(BranchSpec::affine(x, std::min(1.0, x + widths[i])));
    x += widths[i] + gaps[i + 1] / gsum * slack;
  }
  return validate_system(std::move(specs));
}

inline std::string config_path(const std::string& name) { return std::string(COOKIE_CONFIG_DIR) + "/" + name; }

}  // namespace cookie::testing

#include <doctest.h>

#include "cookie/error.hpp"

namespace cookie::testing {

/// Runs fn and returns the code of the cookie::Error it throws.
template <class Fn>
std::optional<ErrorCode> error_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

#define CHECK_ERROR(code, expr) CHECK(::cookie::testing::error_of([&] { (void)(expr); }) == (code))
#define CHECK_CLOSE(a, b, tol) CHECK(std::abs((a) - (b)) <= (tol))

}  // namespace cookie::testing
