#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace clusterlab {

/// The single source of randomness: std::mt19937_64, seeded per named stream
/// from a root seed via splitmix64 so independent consumers never share state.
/// Reals are formed from the top 53 bits directly, which keeps sequences
/// identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  /// Stream derived from (seed, tag).
  static Rng stream(std::uint64_t seed, std::string_view tag, std::uint64_t index = 0);

  std::uint64_t bits() { return engine_(); }
  /// Uniform on [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Log-uniform on [lo, hi].
  double log_uniform(double lo, double hi);
  /// Uniform integer in [lo, hi].
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);

 private:
  std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);

}  // namespace clusterlab
