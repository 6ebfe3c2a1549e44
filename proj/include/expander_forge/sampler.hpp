#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "expander_forge/exact.hpp"
#include "expander_forge/graph.hpp"
#include "expander_forge/rng.hpp"

namespace expander_forge {

struct SampleConfig {
  int chi = 1;
  int n = 3;
  std::uint64_t trials = 1;
  std::uint64_t seed = 0;

  /// Throws ParityError / PreconditionError.
  void validate() const;
};

struct WilsonInterval {
  double low = 0.0;
  double high = 1.0;
};

/// Wilson score interval for `successes` out of `trials`; z defaults to the
/// two-sided 95% normal quantile.
WilsonInterval wilson_interval(std::uint64_t successes, std::uint64_t trials, double z = 1.959963984540054);

struct ConnectivityEstimate {
  std::uint64_t connected = 0;
  std::uint64_t trials = 0;
  double ci_low = 0.0;
  double ci_high = 1.0;

  double fraction() const { return trials == 0 ? 0.0 : static_cast<double>(connected) / static_cast<double>(trials); }
  Rational exact_fraction() const {
    if (trials == 0) return 0;
    Rational q{BigInt(connected), BigInt(trials)};
    q.canonicalize();
    return q;
  }
};

/// |F_{chi,n}| = n! * C(3chi, n) * N((3chi - n)/2).
BigInt count_family(int chi, int n);

/// Uniform member of F_{chi,n}: a uniformly random injective assignment of
/// boundary labels to interior labels, then a uniform perfect matching of
/// the remaining interior labels. Deterministic in the engine state.
HalfEdgePairing sample_partition(int chi, int n, Rng& rng);

/// Trial `trial_index` of the run described by cfg (see Rng::for_trial).
HalfEdgePairing sample_partition(const SampleConfig& cfg, std::uint64_t trial_index);

inline constexpr std::uint64_t kEnumerationGuard = 10'000'000;

/// Visits every good partition of F_{chi,n} exactly once, in a fixed order:
/// boundary labels take their interior partners in increasing order first,
/// then the smallest free interior label is paired with each larger free one.
/// Returning false from `visit` stops the enumeration early. Throws
/// GuardExceeded if count_family(chi, n) > guard.
void enumerate_family(int chi, int n, const std::function<bool(const HalfEdgePairing&)>& visit,
                      std::uint64_t guard = kEnumerationGuard);

/// First member of F_{chi,n}, in enumerate_family order, whose graph is
/// connected. Branches that can no longer become connected are pruned, so
/// this is usable far beyond the enumeration guard. nullopt if the family
/// has no connected member.
std::optional<HalfEdgePairing> first_connected_partition(int chi, int n);

/// Fraction of connected graphs among cfg.trials samples, with a 95%
/// Wilson interval.
ConnectivityEstimate estimate_connectivity(const SampleConfig& cfg);

/// Moves n to the nearest valid value for chi: clamps to [0, 3chi] and
/// decrements when 3chi - n is odd (increments only from n = 0).
int parity_adjusted_n(int chi, int n);

}  // namespace expander_forge
