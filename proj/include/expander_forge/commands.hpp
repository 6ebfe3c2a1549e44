#pragma once

// Experiment drivers behind the command-line tool. Each returns rows; the
// *_csv helpers render them byte-deterministically.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "expander_forge/bounds.hpp"
#include "expander_forge/cheeger.hpp"
#include "expander_forge/construct.hpp"
#include "expander_forge/exact.hpp"
#include "expander_forge/sampler.hpp"

namespace expander_forge {

/// Rule giving n as a function of chi before parity adjustment:
/// "pow:<alpha>" is floor(chi^alpha), "linear:<c>" is floor(c * chi).
struct NRule {
  enum class Kind { Pow, Linear };
  Kind kind = Kind::Pow;
  Rational param;
  std::string text;

  /// Throws ParseError on malformed rules or negative parameters.
  static NRule parse(std::string_view text);
  int raw_n(int chi) const;
  int n(int chi) const { return parity_adjusted_n(chi, raw_n(chi)); }
};

struct SampleRow {
  std::uint64_t trial = 0;
  bool connected = false;
  double lambda1 = 0.0;
  std::optional<double> sigma1;
  std::optional<Rational> h_exact;
  int genus = 0;
};

/// Per-trial spectra, exact Cheeger constant when within `guard`, genus.
std::vector<SampleRow> run_sample(const SampleConfig& cfg, int guard = kDefaultCheegerGuard);
std::string sample_csv(const std::vector<SampleRow>& rows);
/// One row: connectivity estimate plus 5/50/95% nearest-rank quantiles of
/// lambda1 over all trials.
std::string sample_summary_csv(const SampleConfig& cfg, const std::vector<SampleRow>& rows);

struct SweepRow {
  int chi = 0;
  int n = 0;
  int n_requested = 0;
  std::uint64_t seed = 0;
  ConnectivityEstimate estimate;
};

std::vector<SweepRow> run_sweep(const std::vector<int>& chis, const NRule& rule, std::uint64_t trials,
                                std::uint64_t seed);
std::string sweep_csv(const std::vector<SweepRow>& rows);

std::string bounds_csv(int chi, int n, const Rational& mu, const Rational& sum);

struct ConstructRow {
  FamilyMember member;
  int chi = 0;
  int n = 0;
  double lambda1 = 0.0;
  std::optional<Rational> h_exact;
  std::optional<bool> cheeger_ok;  // lambda1 >= h^2/18 - tol
};

std::vector<ConstructRow> run_construct(const Rational& theta, int g_min, int g_max, int guard = kDefaultCheegerGuard,
                                        std::uint64_t seed = 0);
std::string construct_manifest_csv(const std::vector<ConstructRow>& rows);

/// Exact h when the search fits `guard`, nullopt otherwise.
std::optional<CheegerCertificate> try_cheeger_exact(const MultiGraph& g, int guard);

}  // namespace expander_forge
