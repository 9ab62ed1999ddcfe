#include "cookie/system.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "cookie/error.hpp"
#include "cookie/kernels.hpp"
#include "cookie/rng.hpp"

namespace cookie {

double BranchSpec::inverse(double y) const {
  return interval.lo + interval.length() * (y + epsilon * y * (y - 1.0));
}

double BranchSpec::inverse_derivative(double y) const {
  return interval.length() * (1.0 + epsilon * (2.0 * y - 1.0));
}

double BranchSpec::forward(double x) const {
  const double u = (x - interval.lo) / interval.length();
  if (kind == BranchKind::Affine) return std::clamp(u, 0.0, 1.0);
  // eps*y^2 + (1-eps)*y - u = 0, root in [0,1]; cancellation-free form.
  const double lin = 1.0 - epsilon;
  const double y = 2.0 * u / (lin + std::sqrt(lin * lin + 4.0 * epsilon * u));
  return std::clamp(y, 0.0, 1.0);
}

double BranchSpec::sup_inverse_derivative() const {
  return interval.length() * (1.0 + std::abs(epsilon));
}

namespace {

std::string describe(const BranchSpec& b) {
  std::ostringstream os;
  os << "[" << b.interval.lo << ", " << b.interval.hi << "]";
  if (b.kind == BranchKind::QuadraticPerturbed) os << " eps=" << b.epsilon;
  return os.str();
}

void check_branch(const BranchSpec& b) {
  const auto [a, c] = b.interval;
  if (!std::isfinite(a) || !std::isfinite(c) || !(0.0 <= a && a < c && c <= 1.0))
    throw Error(ErrorCode::InvalidInterval, "branch " + describe(b) + " needs 0 <= a < b <= 1");
  if (b.kind == BranchKind::Affine && b.epsilon != 0.0)
    throw Error(ErrorCode::InvalidInterval, "affine branch " + describe(b) + " carries epsilon");
  if (!std::isfinite(b.epsilon) || std::abs(b.epsilon) >= 1.0)
    throw Error(ErrorCode::NonMonotone, "branch " + describe(b) + " needs |eps| < 1");
  if (b.sup_inverse_derivative() >= 1.0)
    throw Error(ErrorCode::NotExpanding,
                "branch " + describe(b) + " has sup psi' = (b-a)(1+|eps|) >= 1");
}

}  // namespace

CookieCutterSystem validate_system(std::vector<BranchSpec> specs) {
  for (const auto& b : specs) check_branch(b);
  if (specs.size() < 2)
    throw Error(ErrorCode::TooFewBranches, "need at least 2 branches, got " + std::to_string(specs.size()));
  std::sort(specs.begin(), specs.end(),
            [](const BranchSpec& l, const BranchSpec& r) { return l.interval.lo < r.interval.lo; });
  for (std::size_t i = 0; i + 1 < specs.size(); ++i) {
    if (!(specs[i].interval.hi < specs[i + 1].interval.lo))
      throw Error(ErrorCode::OverlappingIntervals,
                  describe(specs[i]) + " and " + describe(specs[i + 1]) + " are not separated by a gap");
  }
  return CookieCutterSystem(std::move(specs));
}

CookieCutterSystem::CookieCutterSystem(std::vector<BranchSpec> branches) : branches_(std::move(branches)) {
  affine_ = std::all_of(branches_.begin(), branches_.end(),
                        [](const BranchSpec& b) { return b.kind == BranchKind::Affine; });
  if (affine_) {
    const double w0 = branches_.front().interval.length();
    degenerate_ = std::all_of(branches_.begin(), branches_.end(), [w0](const BranchSpec& b) {
      return std::abs(b.interval.length() - w0) <= 1e-14 * w0;
    });
  }
}

std::vector<double> CookieCutterSystem::slopes() const {
  if (!affine_) throw Error(ErrorCode::NotAffine, "slopes are defined for affine systems only");
  std::vector<double> s;
  s.reserve(branches_.size());
  for (const auto& b : branches_) s.push_back(b.slope());
  return s;
}

double CookieCutterSystem::max_contraction() const {
  double m = 0.0;
  for (const auto& b : branches_) m = std::max(m, b.sup_inverse_derivative());
  return m;
}

std::size_t CookieCutterSystem::branch_index(double x) const {
  for (std::size_t i = 0; i < branches_.size(); ++i)
    if (branches_[i].interval.contains(x)) return i;
  std::ostringstream os;
  os << "x = " << x << " is not in any branch interval";
  throw Error(ErrorCode::OutsideDomain, os.str());
}

double CookieCutterSystem::forward(double x) const { return branches_[branch_index(x)].forward(x); }

double CookieCutterSystem::derivative(double x) const {
  const auto& b = branches_[branch_index(x)];
  return 1.0 / b.inverse_derivative(b.forward(x));
}

namespace {

void check_symbols(const CookieCutterSystem& system, std::span<const std::uint32_t> symbols) {
  if (symbols.empty()) throw Error(ErrorCode::InvalidArgument, "symbolic word must be non-empty");
  for (auto s : symbols)
    if (s >= system.size())
      throw Error(ErrorCode::InvalidArgument,
                  "symbol " + std::to_string(s) + " exceeds alphabet of size " + std::to_string(system.size()));
}

}  // namespace

Interval cylinder(const CookieCutterSystem& system, const SymbolicWord& word) {
  check_symbols(system, word.symbols);
  double lo = 0.0;
  double hi = 1.0;
  for (auto it = word.symbols.rbegin(); it != word.symbols.rend(); ++it) {
    const auto& b = system.branch(*it);
    lo = b.inverse(lo);
    hi = b.inverse(hi);
  }
  return {lo, hi};
}

double birkhoff_lyapunov(const CookieCutterSystem& system, std::span<const std::uint32_t> symbols) {
  check_symbols(system, symbols);
  double y = 0.5;
  double sum = 0.0;
  for (auto it = symbols.rbegin(); it != symbols.rend(); ++it) {
    const auto& b = system.branch(*it);
    sum -= std::log(b.inverse_derivative(y));
    y = b.inverse(y);
  }
  return sum / static_cast<double>(symbols.size());
}

double birkhoff_lyapunov(const CookieCutterSystem& system, const SymbolicWord& word) {
  return birkhoff_lyapunov(system, std::span<const std::uint32_t>(word.symbols));
}

std::vector<double> cumulative_weights(std::span<const double> weights) {
  std::vector<double> cdf(weights.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) cdf[i] = acc += weights[i];
  if (!cdf.empty()) cdf.back() = 1.0;
  return cdf;
}

std::uint32_t draw_symbol(std::span<const double> cdf, double u) {
  const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
  const auto idx = static_cast<std::uint32_t>(it - cdf.begin());
  return std::min<std::uint32_t>(idx, static_cast<std::uint32_t>(cdf.size() - 1));
}

std::vector<double> sample_lyapunov(const CookieCutterSystem& system, std::span<const double> weights,
                                    std::size_t path_length, std::size_t paths, std::uint64_t seed, Exec exec) {
  if (weights.size() != system.size())
    throw Error(ErrorCode::BadWeights, "expected " + std::to_string(system.size()) + " weights, got " +
                                           std::to_string(weights.size()));
  double total = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0) || !std::isfinite(w)) throw Error(ErrorCode::BadWeights, "weights must be nonnegative");
    total += w;
  }
  if (std::abs(total - 1.0) > 1e-12) {
    std::ostringstream os;
    os.precision(17);
    os << "weights sum to " << total << ", not 1";
    throw Error(ErrorCode::BadWeights, os.str());
  }
  if (path_length < 1 || paths < 1)
    throw Error(ErrorCode::InvalidArgument, "path_length and paths must be at least 1");

  const auto cdf = cumulative_weights(weights);
  std::vector<double> out(paths);
  if (exec == Exec::Parallel)
    kernels::omp::sample_paths(system, cdf, path_length, seed, out);
  else
    kernels::serial::sample_paths(system, cdf, path_length, seed, out);
  return out;
}

}  // namespace cookie
