#pragma once

// Half-edge pairings of the degree-3/degree-1 configuration model and the
// multigraphs they glue into.
//
// Labelling: interior vertex v_i (1 <= i <= chi) owns half-edges 3i-2, 3i-1,
// 3i; boundary vertex w_j (1 <= j <= n) owns half-edge 3*chi + j. In a
// MultiGraph built from a pairing, v_i has id i-1 and w_j has id chi+j-1.

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace expander_forge {

enum class Role : std::uint8_t { Interior, Boundary };

/// Unordered vertex pair with u <= v; u == v is a loop.
struct Edge {
  int u = 0;
  int v = 0;

  Edge() = default;
  Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

  bool is_loop() const { return u == v; }
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Throws ParityError unless chi >= 1, n >= 0 and 3*chi - n is a
/// non-negative even integer.
void require_valid_parameters(int chi, int n);

/// True iff (chi, n) satisfies require_valid_parameters.
bool valid_parameters(int chi, int n);

using LabelPair = std::pair<int, int>;

/// A good partition: fixed-point-free involution on {1..3chi+n} in which
/// every pair contains an interior label (<= 3chi). Always valid once
/// constructed.
class HalfEdgePairing {
 public:
  /// Throws ParityError for bad (chi, n) and PreconditionError if `pairs`
  /// is not a good partition.
  HalfEdgePairing(int chi, int n, std::span<const LabelPair> pairs);

  /// Builds from a partner table indexed by label (entry 0 unused).
  static HalfEdgePairing from_partners(int chi, int n, std::vector<int> partner);

  int chi() const { return chi_; }
  int n() const { return n_; }
  int label_count() const { return 3 * chi_ + n_; }
  int partner(int label) const { return partner_.at(static_cast<std::size_t>(label)); }

  /// Pairs (i, j) with i < j, sorted by i.
  std::vector<LabelPair> pairs() const;

  friend bool operator==(const HalfEdgePairing& a, const HalfEdgePairing& b) {
    return a.chi_ == b.chi_ && a.n_ == b.n_ && a.partner_ == b.partner_;
  }

 private:
  HalfEdgePairing(int chi, int n, std::vector<int> partner, bool);

  int chi_;
  int n_;
  std::vector<int> partner_;
};

/// True iff `pairs` is a fixed-point-free involution covering {1..3chi+n}
/// with min(i, j) <= 3chi for every pair. Throws ParityError on bad (chi, n).
bool validate_partition(int chi, int n, std::span<const LabelPair> pairs);

/// Vertex set with roles and an edge multiset; loops and parallel edges are
/// allowed. A loop adds 2 to its vertex's degree and 1 to the edge count.
class MultiGraph {
 public:
  MultiGraph() = default;
  MultiGraph(std::vector<Role> roles, std::vector<Edge> edges);

  int vertex_count() const { return static_cast<int>(roles_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Role>& roles() const { return roles_; }
  Role role(int v) const { return roles_.at(static_cast<std::size_t>(v)); }
  const std::vector<Edge>& edges() const { return edges_; }

  int degree(int v) const { return degree_.at(static_cast<std::size_t>(v)); }
  const std::vector<int>& degrees() const { return degree_; }

  int interior_count() const;
  int boundary_count() const;
  std::vector<int> boundary_vertices() const;
  std::vector<int> interior_vertices() const;

  /// Neighbour list of v (other endpoint of each non-loop edge, repeated
  /// for parallel edges).
  const std::vector<int>& neighbors(int v) const { return adjacency_.at(static_cast<std::size_t>(v)); }
  int loop_count(int v) const { return loops_.at(static_cast<std::size_t>(v)); }

  /// Same roles and the same edge multiset.
  friend bool operator==(const MultiGraph& a, const MultiGraph& b);

 private:
  std::vector<Role> roles_;
  std::vector<Edge> edges_;
  std::vector<int> degree_;
  std::vector<int> loops_;
  std::vector<std::vector<int>> adjacency_;
};

/// Glues paired half-edges; one edge per pair, in pair order.
MultiGraph build_graph(const HalfEdgePairing& p);

/// Maximal connected vertex sets, each sorted, ordered by smallest member.
std::vector<std::vector<int>> connected_components(const MultiGraph& g);

bool is_connected(const MultiGraph& g);

struct Topology {
  int components = 0;
  int euler_char = 0;  // |V| - |E|
  int genus = 0;       // (chi - n)/2 + 1 from the degree counts

  friend bool operator==(const Topology&, const Topology&) = default;
};

/// Throws PreconditionError if some vertex degree is not 1 or 3.
Topology topology(const MultiGraph& g);

/// Edges of g leaving the vertex set `in_set` (indexed by vertex).
int edge_boundary_size(const MultiGraph& g, const std::vector<bool>& in_set);

}  // namespace expander_forge
