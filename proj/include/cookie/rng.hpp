#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace cookie {

/// Per-path random stream: std::mt19937_64 seeded through std::seed_seq with
/// the 32-bit halves of (seed, path). Both engine and seed_seq are fully
/// specified by the standard, so streams are bit-identical across builds.
class PathRng {
 public:
  PathRng(std::uint64_t seed, std::uint64_t path) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(path), static_cast<std::uint32_t>(path >> 32)};
    engine_.seed(seq);
  }

  /// Uniform on [0,1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

/// Cumulative sums of a probability vector; the last entry is pinned to 1.
std::vector<double> cumulative_weights(std::span<const double> weights);

/// Inverse-CDF draw: first index with u < cdf[i].
std::uint32_t draw_symbol(std::span<const double> cdf, double u);

}  // namespace cookie
