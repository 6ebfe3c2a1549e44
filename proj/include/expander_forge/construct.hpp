#pragma once

// Constructive side: splitting a graph into two trees, finding a boundary
// subset with few cut edges, the Steklov test function it yields, and the
// tree-planting construction of expander families with a prescribed ratio
// of pendant vertices to genus.

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "expander_forge/cheeger.hpp"
#include "expander_forge/exact.hpp"
#include "expander_forge/graph.hpp"

namespace expander_forge {

struct TreeSplit {
  std::vector<Edge> removed_edges;  // in removal order; the last one splits the tree
  std::vector<int> side_a;          // contains vertex 0
  std::vector<int> side_b;
};

/// Removes cycle edges (lexicographically smallest first, loops included)
/// until a spanning tree remains, then its smallest edge. Throws
/// PreconditionError for disconnected graphs or fewer than 2 vertices.
TreeSplit two_tree_split(const MultiGraph& g);

struct BalancedSubset {
  std::vector<int> h_set;
  int boundary_edges = 0;
  int boundary_vertices_inside = 0;
};

/// Vertex set H with |dH| <= genus + 1 and n/4 <= |H cap boundary| <= n/2,
/// found by descending through subtrees of a two-tree split. Throws
/// PreconditionError if g is disconnected or has fewer than 2 boundary
/// vertices.
BalancedSubset balanced_boundary_subset(const MultiGraph& g);

struct TestFunction {
  std::vector<Rational> values;  // one per vertex
  Rational rayleigh;
  Rational bound;  // 16 (genus + 1) / (3n)
  bool within_bound = false;
};

/// f = 1 - c/n on H and -c/n elsewhere, with c = |H cap boundary|.
TestFunction steklov_test_function(const MultiGraph& g, const BalancedSubset& h);

/// Tree with vertices v_0..v_k (ids 0..k) and w_1..w_{k-1} (ids k+1..2k-1),
/// edges v_i ~ v_{i+1} and v_i ~ w_i. v_0..v_{k-1} are Interior (v_0 gains
/// two edges when planted), v_k and the w_i are Boundary.
MultiGraph build_Tk(int k);

/// Replaces every edge u1 ~ u2 of a connected 3-regular graph by a copy of
/// T_k whose v_0 is joined to u1 and u2. Original vertices keep their ids;
/// copies follow in edge order. Throws PreconditionError otherwise.
MultiGraph plant_trees(const MultiGraph& g, int k);

/// Adds a loop at each listed degree-1 vertex, which becomes Interior.
/// Throws PreconditionError on repeats or on degree != 1.
MultiGraph add_loops(const MultiGraph& g, const std::vector<int>& vs);

/// Lower bound min{1/(2k), h / (3k + 1 + k h)} for h(plant_trees(G, k)) in
/// terms of h(G).
Rational planted_cheeger_bound(const Rational& h, int k);

struct FamilyPlan {
  Rational theta;
  int k = 1;
  int m0 = 1;
  bool exact_multiple = false;  // theta == 3k

  /// Throws PreconditionError unless theta > 0.
  static FamilyPlan from_theta(const Rational& theta);

  int loops_at(int m) const;     // t_m
  int genus_at(int m) const;     // g_m = m + 1 + t_m
  int pendants_at(int m) const;  // n_m = 3km - t_m
};

struct BaseGraph {
  std::string name;
  MultiGraph graph;
  Rational h;  // exact Cheeger constant
};

/// Supplies a connected 3-regular graph on 2m vertices with certified h.
using BaseProvider = std::function<BaseGraph(int m)>;

/// Named graphs where available (theta graph, K4, K_{3,3}, Petersen,
/// Heawood for m = 1, 2, 3, 5, 7), otherwise the first simple connected
/// sample of F_{2m,0} under `seed` whose exact h is at least 2/11. Throws
/// CertificationFailure if 2m exceeds the exact-search guard or no sample
/// qualifies. Results are cached per m.
BaseProvider certified_base_provider(std::uint64_t seed = 0, int guard = kDefaultCheegerGuard);

/// Named 3-regular graphs used by the provider.
MultiGraph theta_graph();
MultiGraph complete_graph_k4();
MultiGraph complete_bipartite_k33();
MultiGraph petersen_graph();
MultiGraph heawood_graph();

struct FamilyMember {
  int genus = 0;
  MultiGraph graph;
  bool fallback = false;  // small genus: first connected member of F_{2g,2}
  int m = 0;
  int u = 0;
  std::string base_name;
  std::optional<Rational> h_lower;  // planted_cheeger_bound of the base
};

/// Member of genus g. Throws PreconditionError for g < 1 and
/// CertificationFailure when the provider cannot certify the base.
FamilyMember expander_family(const FamilyPlan& plan, int g, const BaseProvider& base);

}  // namespace expander_forge
