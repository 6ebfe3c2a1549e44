#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace expander_forge {

/// Seedable generator used by every sampling routine.
///
/// Contract (version 1, reported as kRngName):
///   - engine: std::mt19937_64, whose output sequence is fixed by the C++
///     standard for a given seed;
///   - stream splitting: trial `i` of a run seeded with `s` uses the engine
///     seeded with stream_seed(s, i), so trials can run in any order or in
///     parallel and still reproduce a serial run;
///   - bounded draws use rejection on the raw 64-bit output, never the
///     implementation-defined std distributions.
class Rng {
 public:
  static constexpr const char* kRngName = "mt19937_64+splitmix64-stream/v1";

  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Engine for trial `trial_index` of a run with base seed `seed`.
  static Rng for_trial(std::uint64_t seed, std::uint64_t trial_index) {
    return Rng(stream_seed(seed, trial_index));
  }

  static std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
  }

  static std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t trial_index) {
    return splitmix64(splitmix64(seed) ^ (trial_index * 0xD1B54A32D192ED03ULL + 0x8CB92BA72F3D8DD7ULL));
  }

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound) {
    // Reject the top partial block so every residue is equally likely.
    const std::uint64_t limit = bound * (~std::uint64_t{0} / bound);
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % bound;
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Standard normal via Box-Muller; deterministic given the engine state.
  double normal() {
    double u1;
    do {
      u1 = uniform01();
    } while (u1 <= 0.0);
    const double u2 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace expander_forge
