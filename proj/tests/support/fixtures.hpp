#pragma once

#include <cstdint>
#include <vector>

#include "expander_forge/graph.hpp"
#include "expander_forge/rng.hpp"
#include "expander_forge/sampler.hpp"

namespace fixture {

using namespace expander_forge;

inline MultiGraph star() {
  return MultiGraph({Role::Interior, Role::Boundary, Role::Boundary, Role::Boundary}, {{0, 1}, {0, 2}, {0, 3}});
}

inline MultiGraph theta() { return MultiGraph({Role::Interior, Role::Interior}, {{0, 1}, {0, 1}, {0, 1}}); }

inline MultiGraph loop_pendant() { return MultiGraph({Role::Interior, Role::Boundary}, {{0, 0}, {0, 1}}); }

struct Sample {
  int chi = 0;
  int n = 0;
  MultiGraph graph;
};

// Connected members of F_{chi,n} with 1 <= chi <= max_chi and n >= min_n,
// deterministic in `seed`.
inline std::vector<Sample> connected_samples(std::size_t count, int max_chi, std::uint64_t seed, int min_n = 0) {
  Rng rng(seed);
  std::vector<Sample> out;
  while (out.size() < count) {
    const int chi = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_chi)));
    std::vector<int> ns;
    for (int n = min_n; n <= 3 * chi; ++n)
      if (valid_parameters(chi, n)) ns.push_back(n);
    if (ns.empty()) continue;
    const int n = ns[rng.below(ns.size())];
    for (int attempt = 0; attempt < 50; ++attempt) {
      MultiGraph g = build_graph(sample_partition(chi, n, rng));
      if (is_connected(g)) {
        out.push_back({chi, n, std::move(g)});
        break;
      }
    }
  }
  return out;
}

}  // namespace fixture
