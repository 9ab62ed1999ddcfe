#pragma once

// Cookie-cutter maps on [0,1], described by their inverse branches.
//
// Branch i is a full branch: T maps I_i = [a_i, b_i] onto [0,1], and the
// inverse psi_i : [0,1] -> I_i is given in closed form, so the forward map
// is only ever needed for point queries.

#include <cstdint>
#include <span>
#include <vector>

namespace cookie {

enum class BranchKind { Affine, QuadraticPerturbed };

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  double length() const { return hi - lo; }
  bool contains(double x) const { return lo <= x && x <= hi; }
};

/// One full branch. For QuadraticPerturbed
///   psi(y)  = a + (b-a)(y + eps*y*(y-1)),
///   psi'(y) = (b-a)(1 + eps*(2y-1)).
/// Affine is the eps = 0 member of the same family.
struct BranchSpec {
  BranchKind kind = BranchKind::Affine;
  Interval interval;
  double epsilon = 0.0;

  static BranchSpec affine(double a, double b) { return {BranchKind::Affine, {a, b}, 0.0}; }
  static BranchSpec quadratic(double a, double b, double eps) {
    return {BranchKind::QuadraticPerturbed, {a, b}, eps};
  }

  double inverse(double y) const;
  double inverse_derivative(double y) const;
  /// Solves psi(y) = x for y in [0,1].
  double forward(double x) const;
  double sup_inverse_derivative() const;
  /// |T'| = 1/(b-a); meaningful for affine branches only.
  double slope() const { return 1.0 / interval.length(); }
};

/// Finite itinerary (i_1, ..., i_m) over the branch alphabet.
struct SymbolicWord {
  std::vector<std::uint32_t> symbols;
};

class CookieCutterSystem {
 public:
  const std::vector<BranchSpec>& branches() const { return branches_; }
  std::size_t size() const { return branches_.size(); }
  const BranchSpec& branch(std::size_t i) const { return branches_.at(i); }

  bool is_affine() const { return affine_; }
  /// All branches affine with a common slope; the pressure is then linear in t.
  bool is_affine_degenerate() const { return degenerate_; }
  /// Slopes s_i = 1/(b_i - a_i); requires is_affine().
  std::vector<double> slopes() const;
  /// max_i sup psi_i' (< 1): the contraction rate of cylinders.
  double max_contraction() const;

  /// Index of the branch whose interval holds x; throws OutsideDomain.
  std::size_t branch_index(double x) const;
  double forward(double x) const;
  /// |T'(x)| = 1 / psi_i'(T(x)).
  double derivative(double x) const;

  friend CookieCutterSystem validate_system(std::vector<BranchSpec> specs);

 private:
  explicit CookieCutterSystem(std::vector<BranchSpec> branches);

  std::vector<BranchSpec> branches_;
  bool affine_ = false;
  bool degenerate_ = false;
};

/// Checks every cookie-cutter invariant and sorts branches by left endpoint.
CookieCutterSystem validate_system(std::vector<BranchSpec> specs);

/// psi_{i_1} o ... o psi_{i_m} ([0,1]).
Interval cylinder(const CookieCutterSystem& system, const SymbolicWord& word);

/// (1/m) sum_k log|T'| along the orbit coded by the word, evaluated on the
/// backward orbit of y = 1/2. Exact for affine systems.
double birkhoff_lyapunov(const CookieCutterSystem& system, const SymbolicWord& word);
double birkhoff_lyapunov(const CookieCutterSystem& system, std::span<const std::uint32_t> symbols);

enum class Exec { Serial, Parallel };

/// Birkhoff averages of `paths` Bernoulli(weights) words of length
/// path_length. Path p draws from its own generator seeded by (seed, p), so
/// the result does not depend on `exec`.
std::vector<double> sample_lyapunov(const CookieCutterSystem& system, std::span<const double> weights,
                                    std::size_t path_length, std::size_t paths, std::uint64_t seed,
                                    Exec exec = Exec::Parallel);

}  // namespace cookie
