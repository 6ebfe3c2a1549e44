#include "expander_forge/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "expander_forge/errors.hpp"

namespace expander_forge {

void SampleConfig::validate() const {
  require_valid_parameters(chi, n);
  if (trials < 1) throw PreconditionError("trials must be at least 1");
}

WilsonInterval wilson_interval(std::uint64_t successes, std::uint64_t trials, double z) {
  if (trials == 0) return {0.0, 1.0};
  const double nt = static_cast<double>(trials);
  const double p = static_cast<double>(successes) / nt;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / nt;
  const double center = (p + z2 / (2.0 * nt)) / denom;
  const double half = z * std::sqrt(p * (1.0 - p) / nt + z2 / (4.0 * nt * nt)) / denom;
  // Clamp so the interval always contains p despite rounding at p = 0 or 1.
  return {std::min(p, std::max(0.0, center - half)), std::max(p, std::min(1.0, center + half))};
}

BigInt count_family(int chi, int n) {
  require_valid_parameters(chi, n);
  const auto c = static_cast<unsigned long>(chi);
  const auto b = static_cast<unsigned long>(n);
  return factorial(b) * binomial(3 * c, b) * perfect_matchings((3 * c - b) / 2);
}

HalfEdgePairing sample_partition(int chi, int n, Rng& rng) {
  require_valid_parameters(chi, n);
  const int interior = 3 * chi;
  std::vector<int> labels(static_cast<std::size_t>(interior));
  std::iota(labels.begin(), labels.end(), 1);
  std::vector<int> partner(static_cast<std::size_t>(interior + n) + 1, 0);

  // Partial Fisher-Yates: labels[0..n) become the ordered partners of w_1..w_n.
  for (int j = 0; j < n; ++j) {
    const auto k = j + static_cast<int>(rng.below(static_cast<std::uint64_t>(interior - j)));
    std::swap(labels[j], labels[k]);
    partner[labels[j]] = interior + j + 1;
    partner[interior + j + 1] = labels[j];
  }
  // Uniform perfect matching on the rest: pair the first free label with a
  // uniformly chosen later one.
  for (int i = n; i < interior; i += 2) {
    const auto k = i + 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(interior - i - 1)));
    std::swap(labels[i + 1], labels[k]);
    partner[labels[i]] = labels[i + 1];
    partner[labels[i + 1]] = labels[i];
  }
  return HalfEdgePairing::from_partners(chi, n, std::move(partner));
}

HalfEdgePairing sample_partition(const SampleConfig& cfg, std::uint64_t trial_index) {
  require_valid_parameters(cfg.chi, cfg.n);
  Rng rng = Rng::for_trial(cfg.seed, trial_index);
  return sample_partition(cfg.chi, cfg.n, rng);
}

namespace {

// Depth-first walk over good partitions in enumerate_family order.
class PartitionSearch {
 public:
  using Visit = std::function<bool(const std::vector<int>&)>;
  using Feasible = std::function<bool(const std::vector<int>&)>;

  PartitionSearch(int chi, int n, Visit visit, Feasible feasible)
      : chi_(chi), n_(n), partner_(static_cast<std::size_t>(3 * chi + n) + 1, 0),
        visit_(std::move(visit)), feasible_(std::move(feasible)) {}

  void run() { boundary_stage(0); }

 private:
  bool ok() const { return !feasible_ || feasible_(partner_); }

  void link(int a, int b) {
    partner_[a] = b;
    partner_[b] = a;
  }
  void unlink(int a, int b) {
    partner_[a] = 0;
    partner_[b] = 0;
  }

  // Returns false once the visitor asked to stop.
  bool boundary_stage(int j) {
    if (j == n_) return interior_stage();
    const int b = 3 * chi_ + 1 + j;
    for (int a = 1; a <= 3 * chi_; ++a) {
      if (partner_[a] != 0) continue;
      link(a, b);
      const bool keep_going = !ok() || boundary_stage(j + 1);
      unlink(a, b);
      if (!keep_going) return false;
    }
    return true;
  }

  bool interior_stage() {
    int first = 1;
    while (first <= 3 * chi_ && partner_[first] != 0) ++first;
    if (first > 3 * chi_) return visit_(partner_);
    for (int other = first + 1; other <= 3 * chi_; ++other) {
      if (partner_[other] != 0) continue;
      link(first, other);
      const bool keep_going = !ok() || interior_stage();
      unlink(first, other);
      if (!keep_going) return false;
    }
    return true;
  }

  int chi_;
  int n_;
  std::vector<int> partner_;
  Visit visit_;
  Feasible feasible_;
};

// Necessary condition for a partial pairing to extend to a connected graph:
// no finished component other than the whole graph, and enough free
// half-edges left to join the remaining components into one.
bool can_still_connect(int chi, int n, const std::vector<int>& partner) {
  const int nv = chi + n;
  auto owner = [chi](int label) { return label <= 3 * chi ? (label - 1) / 3 : chi + (label - 3 * chi - 1); };
  std::vector<int> parent(static_cast<std::size_t>(nv));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<int> free_count(static_cast<std::size_t>(nv), 0);
  const int total = 3 * chi + n;
  for (int l = 1; l <= total; ++l) {
    if (partner[l] == 0) {
      ++free_count[owner(l)];
    } else if (l < partner[l]) {
      const int a = find(owner(l));
      const int b = find(owner(partner[l]));
      if (a != b) parent[a] = b;
    }
  }
  std::vector<int> root_free(static_cast<std::size_t>(nv), 0);
  for (int v = 0; v < nv; ++v) root_free[find(v)] += free_count[v];
  int components = 0;
  long free_total = 0;
  bool closed = false;
  for (int v = 0; v < nv; ++v) {
    if (find(v) != v) continue;
    ++components;
    free_total += root_free[v];
    if (root_free[v] == 0) closed = true;
  }
  if (components == 1) return true;
  if (closed) return false;
  return free_total >= 2L * (components - 1);
}

}  // namespace

void enumerate_family(int chi, int n, const std::function<bool(const HalfEdgePairing&)>& visit,
                      std::uint64_t guard) {
  const BigInt count = count_family(chi, n);
  if (count > BigInt(std::to_string(guard)))
    throw GuardExceeded("|F_{" + std::to_string(chi) + "," + std::to_string(n) + "}| = " + count.get_str() +
                        " exceeds the enumeration guard " + std::to_string(guard));
  PartitionSearch search(
      chi, n, [&](const std::vector<int>& partner) { return visit(HalfEdgePairing::from_partners(chi, n, partner)); },
      nullptr);
  search.run();
}

std::optional<HalfEdgePairing> first_connected_partition(int chi, int n) {
  require_valid_parameters(chi, n);
  std::optional<HalfEdgePairing> found;
  PartitionSearch search(
      chi, n,
      [&](const std::vector<int>& partner) {
        auto p = HalfEdgePairing::from_partners(chi, n, partner);
        if (!is_connected(build_graph(p))) return true;
        found = std::move(p);
        return false;
      },
      [chi, n](const std::vector<int>& partner) { return can_still_connect(chi, n, partner); });
  search.run();
  return found;
}

ConnectivityEstimate estimate_connectivity(const SampleConfig& cfg) {
  cfg.validate();
  ConnectivityEstimate est;
  est.trials = cfg.trials;
  for (std::uint64_t t = 0; t < cfg.trials; ++t)
    if (is_connected(build_graph(sample_partition(cfg, t)))) ++est.connected;
  const auto ci = wilson_interval(est.connected, est.trials);
  est.ci_low = ci.low;
  est.ci_high = ci.high;
  return est;
}

int parity_adjusted_n(int chi, int n) {
  if (chi < 1) throw ParityError("chi must be at least 1");
  n = std::clamp(n, 0, 3 * chi);
  if ((3 * chi - n) % 2 != 0) n = n > 0 ? n - 1 : n + 1;
  return n;
}

}  // namespace expander_forge
