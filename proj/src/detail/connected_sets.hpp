#pragma once

// Enumeration of connected vertex sets on graphs of at most 64 vertices,
// each set visited exactly once together with its edge-boundary size.

#include <bit>
#include <cstdint>
#include <span>
#include <type_traits>
#include <utility>
#include <vector>

#include "expander_forge/errors.hpp"
#include "expander_forge/graph.hpp"

namespace expander_forge::detail {

using Mask = std::uint64_t;

inline constexpr int kMaxLocalVertices = 64;

inline Mask bit(int i) { return Mask{1} << i; }

/// Induced subgraph on a vertex list, in bitmask form. Boundary sizes are
/// measured in the full graph: outer_degree counts every non-loop edge.
struct LocalGraph {
  std::vector<int> vertices;                            // local index -> graph id
  std::vector<Mask> adj;                                // induced adjacency
  std::vector<std::vector<std::pair<int, int>>> mult;   // (local neighbour, multiplicity)
  std::vector<int> outer_degree;

  int size() const { return static_cast<int>(vertices.size()); }
  Mask all() const { return size() == 64 ? ~Mask{0} : bit(size()) - 1; }

  int multiplicity_into(int w, Mask set) const {
    int m = 0;
    for (const auto& [u, k] : mult[w])
      if (set & bit(u)) m += k;
    return m;
  }

  bool connected(Mask set) const {
    if (set == 0) return false;
    Mask seen = set & (~set + 1);
    Mask frontier = seen;
    while (frontier) {
      Mask next = 0;
      for (Mask f = frontier; f; f &= f - 1) next |= adj[std::countr_zero(f)];
      next &= set & ~seen;
      seen |= next;
      frontier = next;
    }
    return seen == set;
  }
};

inline LocalGraph make_local(const MultiGraph& g, std::span<const int> vertices) {
  if (vertices.size() > kMaxLocalVertices) throw GuardExceeded("bitmask search is limited to 64 vertices");
  LocalGraph lg;
  lg.vertices.assign(vertices.begin(), vertices.end());
  const int k = lg.size();
  std::vector<int> local(static_cast<std::size_t>(g.vertex_count()), -1);
  for (int i = 0; i < k; ++i) local[lg.vertices[i]] = i;
  lg.adj.assign(k, 0);
  lg.mult.assign(k, {});
  lg.outer_degree.assign(k, 0);
  for (int i = 0; i < k; ++i) {
    const int v = lg.vertices[i];
    lg.outer_degree[i] = static_cast<int>(g.neighbors(v).size());
    for (int u : g.neighbors(v)) {
      const int j = local[u];
      if (j < 0) continue;
      lg.adj[i] |= bit(j);
      auto& row = lg.mult[i];
      auto it = row.begin();
      while (it != row.end() && it->first != j) ++it;
      if (it == row.end())
        row.emplace_back(j, 1);
      else
        ++it->second;
    }
  }
  return lg;
}

/// Calls visit(set, size, boundary) for every connected set of at most
/// max_size local vertices. Sets are grown from their smallest member; each
/// is reached exactly once.
template <class Visit>
class ConnectedSetWalk {
 public:
  ConnectedSetWalk(const LocalGraph& lg, int max_size, Visit& visit) : lg_(lg), max_size_(max_size), visit_(visit) {}

  void run() {
    for (int v = 0; v < lg_.size(); ++v) {
      const Mask done = bit(v) | (bit(v) - 1);
      grow(bit(v), 1, lg_.outer_degree[v], lg_.adj[v] & ~done, done);
    }
  }

 private:
  void grow(Mask set, int size, int boundary, Mask extension, Mask excluded) {
    visit_(set, size, boundary);
    if (size >= max_size_) return;
    while (extension) {
      const int w = std::countr_zero(extension);
      extension &= extension - 1;
      const Mask next_ext = (extension | (lg_.adj[w] & ~excluded)) & ~bit(w);
      const int next_boundary = boundary + lg_.outer_degree[w] - 2 * lg_.multiplicity_into(w, set);
      grow(set | bit(w), size + 1, next_boundary, next_ext, excluded | bit(w));
      excluded |= bit(w);
    }
  }

  const LocalGraph& lg_;
  int max_size_;
  Visit& visit_;
};

template <class Visit>
void for_each_connected_set(const LocalGraph& lg, int max_size, Visit&& visit) {
  ConnectedSetWalk<std::remove_reference_t<Visit>> walk(lg, max_size, visit);
  walk.run();
}

}  // namespace expander_forge::detail
