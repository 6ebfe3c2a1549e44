#include "expander_forge/construct.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

#include "expander_forge/errors.hpp"
#include "expander_forge/sampler.hpp"
#include "expander_forge/spectra.hpp"

namespace expander_forge {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(static_cast<std::size_t>(n)) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[std::max(a, b)] = std::min(a, b);
    return true;
  }

 private:
  std::vector<int> parent_;
};

// Number of components of (V, edges with keep[i] set).
int component_count(int nv, const std::vector<Edge>& edges, const std::vector<char>& keep) {
  DisjointSets ds(nv);
  int comps = nv;
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (keep[i] && ds.unite(edges[i].u, edges[i].v)) --comps;
  return comps;
}

// Edge indices ordered by (u, v, index).
std::vector<std::size_t> lexicographic_order(const std::vector<Edge>& edges) {
  std::vector<std::size_t> order(edges.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return edges[a] < edges[b]; });
  return order;
}

void require_connected(const MultiGraph& g, const char* what) {
  if (g.vertex_count() < 2 || !is_connected(g))
    throw PreconditionError(std::string(what) + " needs a connected graph with at least 2 vertices");
}

int count_boundary(const MultiGraph& g, const std::vector<int>& set) {
  return static_cast<int>(std::count_if(set.begin(), set.end(), [&](int v) { return g.role(v) == Role::Boundary; }));
}

bool in_window(int c, int n) { return 4 * c >= n && 2 * c <= n; }

BaseGraph named_base(std::string name, MultiGraph g) {
  CheegerOptions opts;
  opts.guard = std::max(kDefaultCheegerGuard, g.vertex_count());
  opts.method = CheegerMethod::Subsets;
  Rational h = cheeger_exact(g, opts).h;
  return {std::move(name), std::move(g), std::move(h)};
}

MultiGraph cubic(int nv, std::vector<Edge> edges) {
  return MultiGraph(std::vector<Role>(static_cast<std::size_t>(nv), Role::Interior), std::move(edges));
}

bool is_simple(const MultiGraph& g) {
  auto edges = g.edges();
  std::sort(edges.begin(), edges.end());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (edges[i].is_loop()) return false;
    if (i > 0 && edges[i] == edges[i - 1]) return false;
  }
  return true;
}

}  // namespace

TreeSplit two_tree_split(const MultiGraph& g) {
  require_connected(g, "two_tree_split");
  const int nv = g.vertex_count();
  const auto& edges = g.edges();
  const auto order = lexicographic_order(edges);
  std::vector<char> keep(edges.size(), 1);
  int kept = static_cast<int>(edges.size());

  TreeSplit out;
  while (kept > nv - 1) {
    bool removed = false;
    for (std::size_t idx : order) {
      if (!keep[idx]) continue;
      keep[idx] = 0;
      if (edges[idx].is_loop() || component_count(nv, edges, keep) == 1) {
        out.removed_edges.push_back(edges[idx]);
        --kept;
        removed = true;
        break;
      }
      keep[idx] = 1;
    }
    if (!removed) throw InternalInconsistency("no cycle edge found in a graph with cycles");
  }
  for (std::size_t idx : order) {
    if (!keep[idx]) continue;
    keep[idx] = 0;
    out.removed_edges.push_back(edges[idx]);
    break;
  }

  DisjointSets ds(nv);
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (keep[i]) ds.unite(edges[i].u, edges[i].v);
  for (int v = 0; v < nv; ++v) (ds.find(v) == ds.find(0) ? out.side_a : out.side_b).push_back(v);
  if (out.side_b.empty()) throw InternalInconsistency("tree edge removal left one component");
  return out;
}

BalancedSubset balanced_boundary_subset(const MultiGraph& g) {
  require_connected(g, "balanced_boundary_subset");
  const int n = g.boundary_count();
  if (n < 2) throw PreconditionError("balanced_boundary_subset needs at least 2 boundary vertices");
  const int nv = g.vertex_count();
  const Topology topo = topology(g);

  const TreeSplit split = two_tree_split(g);
  auto finish = [&](std::vector<int> h) {
    BalancedSubset out;
    std::sort(h.begin(), h.end());
    out.boundary_edges = cut_size(g, h);
    out.boundary_vertices_inside = count_boundary(g, h);
    out.h_set = std::move(h);
    if (out.boundary_edges > topo.genus + 1 || !in_window(out.boundary_vertices_inside, n))
      throw InternalInconsistency("balanced subset violates its bounds");
    return out;
  };
  const int ca = count_boundary(g, split.side_a);
  const int cb = count_boundary(g, split.side_b);
  if (in_window(ca, n)) return finish(split.side_a);
  if (in_window(cb, n)) return finish(split.side_b);

  // Forest left by the split, as adjacency lists.
  std::vector<Edge> forest_edges = g.edges();
  for (const Edge& e : split.removed_edges) forest_edges.erase(std::find(forest_edges.begin(), forest_edges.end(), e));
  std::vector<std::vector<int>> forest(static_cast<std::size_t>(nv));
  for (const Edge& e : forest_edges) {
    if (e.is_loop()) continue;
    forest[e.u].push_back(e.v);
    forest[e.v].push_back(e.u);
  }

  std::vector<char> in_h(static_cast<std::size_t>(nv), 0);
  for (int v : (ca > cb ? split.side_a : split.side_b)) in_h[v] = 1;
  int count = std::max(ca, cb);

  // Component of the forest inside H reachable from `start` without `cut`.
  auto collect = [&](int start, int cut) {
    std::vector<int> comp{start};
    std::vector<char> seen(static_cast<std::size_t>(nv), 0);
    seen[start] = 1;
    seen[cut] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (int u : forest[comp[i]])
        if (in_h[u] && !seen[u]) {
          seen[u] = 1;
          comp.push_back(u);
        }
    return comp;
  };

  while (!in_window(count, n)) {
    // Smallest crossing edge (w, v) with w in H.
    int w = -1;
    int v_out = -1;
    for (const Edge& e : g.edges()) {
      if (in_h[e.u] == in_h[e.v]) continue;
      const int inside = in_h[e.u] ? e.u : e.v;
      const int outside = in_h[e.u] ? e.v : e.u;
      if (w < 0 || std::tie(inside, outside) < std::tie(w, v_out)) {
        w = inside;
        v_out = outside;
      }
    }
    if (w < 0) throw InternalInconsistency("no crossing edge during subset descent");
    std::vector<int> tree_nbrs;
    for (int u : forest[w])
      if (in_h[u]) tree_nbrs.push_back(u);

    in_h[w] = 0;
    if (tree_nbrs.size() == 1) continue;  // w is a leaf of the current tree
    if (tree_nbrs.size() != 2) throw InternalInconsistency("unexpected tree degree during subset descent");

    auto first = collect(tree_nbrs[0], w);
    auto second = collect(tree_nbrs[1], w);
    const int c1 = count_boundary(g, first);
    const int c2 = count_boundary(g, second);
    const int min1 = *std::min_element(first.begin(), first.end());
    const int min2 = *std::min_element(second.begin(), second.end());
    const bool keep_first = c1 > c2 || (c1 == c2 && min1 < min2);
    for (int u : keep_first ? second : first) in_h[u] = 0;
    count = keep_first ? c1 : c2;
  }
  std::vector<int> h;
  for (int v = 0; v < nv; ++v)
    if (in_h[v]) h.push_back(v);
  return finish(std::move(h));
}

TestFunction steklov_test_function(const MultiGraph& g, const BalancedSubset& h) {
  const int n = g.boundary_count();
  if (n < 1) throw PreconditionError("test function needs boundary vertices");
  const Topology topo = topology(g);
  std::vector<bool> in(static_cast<std::size_t>(g.vertex_count()), false);
  for (int v : h.h_set) in.at(static_cast<std::size_t>(v)) = true;
  int c = 0;
  for (int v : h.h_set) c += g.role(v) == Role::Boundary ? 1 : 0;
  const Rational share(c, n);

  TestFunction out;
  out.values.resize(static_cast<std::size_t>(g.vertex_count()));
  for (int v = 0; v < g.vertex_count(); ++v) {
    out.values[v] = in[v] ? Rational(1 - share) : Rational(-share);
    out.values[v].canonicalize();
  }
  out.rayleigh = rayleigh_quotient<Rational>(g, out.values);
  out.rayleigh.canonicalize();
  out.bound = Rational(16 * (topo.genus + 1), 3 * n);
  out.bound.canonicalize();
  out.within_bound = out.rayleigh <= out.bound;
  return out;
}

MultiGraph build_Tk(int k) {
  if (k < 1) throw PreconditionError("T_k needs k >= 1");
  std::vector<Role> roles(static_cast<std::size_t>(2 * k), Role::Boundary);
  std::fill(roles.begin(), roles.begin() + k, Role::Interior);
  std::vector<Edge> edges;
  for (int i = 0; i < k; ++i) edges.emplace_back(i, i + 1);
  for (int i = 1; i < k; ++i) edges.emplace_back(i, k + i);
  return MultiGraph(std::move(roles), std::move(edges));
}

MultiGraph plant_trees(const MultiGraph& g, int k) {
  if (k < 1) throw PreconditionError("plant_trees needs k >= 1");
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) != 3) throw PreconditionError("plant_trees needs a 3-regular graph");
  require_connected(g, "plant_trees");

  const MultiGraph piece = build_Tk(k);
  std::vector<Role> roles(static_cast<std::size_t>(g.vertex_count()), Role::Interior);
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    const int base = static_cast<int>(roles.size());
    roles.insert(roles.end(), piece.roles().begin(), piece.roles().end());
    for (const Edge& t : piece.edges()) edges.emplace_back(base + t.u, base + t.v);
    edges.emplace_back(base, e.u);
    edges.emplace_back(base, e.v);
  }
  return MultiGraph(std::move(roles), std::move(edges));
}

MultiGraph add_loops(const MultiGraph& g, const std::vector<int>& vs) {
  std::vector<Role> roles = g.roles();
  std::vector<Edge> edges = g.edges();
  std::vector<char> used(static_cast<std::size_t>(g.vertex_count()), 0);
  for (int v : vs) {
    if (v < 0 || v >= g.vertex_count()) throw PreconditionError("add_loops: vertex out of range");
    if (used[v]) throw PreconditionError("add_loops: vertex " + std::to_string(v) + " listed twice");
    if (g.degree(v) != 1) throw PreconditionError("add_loops: vertex " + std::to_string(v) + " does not have degree 1");
    used[v] = 1;
    roles[v] = Role::Interior;
    edges.emplace_back(v, v);
  }
  return MultiGraph(std::move(roles), std::move(edges));
}

Rational planted_cheeger_bound(const Rational& h, int k) {
  if (k < 1) throw PreconditionError("k must be at least 1");
  Rational first(1, 2 * k);
  first.canonicalize();
  Rational second = h / (3 * k + 1 + k * h);
  return std::min(first, second);
}

FamilyPlan FamilyPlan::from_theta(const Rational& theta) {
  if (theta <= 0) throw PreconditionError("theta must be positive");
  FamilyPlan s;
  s.theta = theta;
  const Rational third = theta / 3;
  BigInt k;
  mpz_cdiv_q(k.get_mpz_t(), third.get_num_mpz_t(), third.get_den_mpz_t());
  if (!k.fits_sint_p()) throw PreconditionError("theta is too large");
  s.k = static_cast<int>(k.get_si());
  s.exact_multiple = Rational(3 * s.k) == theta;
  if (s.exact_multiple) {
    s.m0 = 1;
  } else {
    const Rational ratio = theta / (3 * s.k - theta);
    BigInt m0;
    mpz_cdiv_q(m0.get_mpz_t(), ratio.get_num_mpz_t(), ratio.get_den_mpz_t());
    s.m0 = std::max(1, static_cast<int>(m0.get_si()));
  }
  return s;
}

int FamilyPlan::loops_at(int m) const {
  if (exact_multiple) return 0;
  const Rational t = ((3 * k - theta) * m - theta) / (1 + theta);
  BigInt fl;
  mpz_fdiv_q(fl.get_mpz_t(), t.get_num_mpz_t(), t.get_den_mpz_t());
  return static_cast<int>(fl.get_si());
}

int FamilyPlan::genus_at(int m) const { return m + 1 + loops_at(m); }

int FamilyPlan::pendants_at(int m) const { return 3 * k * m - loops_at(m); }

MultiGraph theta_graph() { return cubic(2, {{0, 1}, {0, 1}, {0, 1}}); }

MultiGraph complete_graph_k4() { return cubic(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }

MultiGraph complete_bipartite_k33() {
  std::vector<Edge> edges;
  for (int a = 0; a < 3; ++a)
    for (int b = 3; b < 6; ++b) edges.emplace_back(a, b);
  return cubic(6, std::move(edges));
}

MultiGraph petersen_graph() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(i, i + 5);
    edges.emplace_back(i + 5, (i + 2) % 5 + 5);
  }
  return cubic(10, std::move(edges));
}

MultiGraph heawood_graph() {
  std::vector<Edge> edges;
  for (int i = 0; i < 14; ++i) {
    edges.emplace_back(i, (i + 1) % 14);
    if (i % 2 == 0) edges.emplace_back(i, (i + 5) % 14);
  }
  return cubic(14, std::move(edges));
}

BaseProvider certified_base_provider(std::uint64_t seed, int guard) {
  auto cache = std::make_shared<std::map<int, BaseGraph>>();
  return [cache, seed, guard](int m) -> BaseGraph {
    if (m < 1) throw PreconditionError("base graph needs m >= 1");
    if (auto it = cache->find(m); it != cache->end()) return it->second;
    BaseGraph base;
    switch (m) {
      case 1: base = named_base("theta", theta_graph()); break;
      case 2: base = named_base("K4", complete_graph_k4()); break;
      case 3: base = named_base("K33", complete_bipartite_k33()); break;
      case 5: base = named_base("Petersen", petersen_graph()); break;
      case 7: base = named_base("Heawood", heawood_graph()); break;
      default: {
        if (2 * m > std::min(guard, 64))
          throw CertificationFailure("cannot certify a cubic base on " + std::to_string(2 * m) +
                                     " vertices: exact Cheeger guard is " + std::to_string(guard));
        const Rational target(2, 11);
        constexpr std::uint64_t kAttempts = 20000;
        bool found = false;
        for (std::uint64_t attempt = 0; attempt < kAttempts && !found; ++attempt) {
          Rng rng = Rng::for_trial(seed ^ static_cast<std::uint64_t>(m), attempt);
          MultiGraph g = build_graph(sample_partition(2 * m, 0, rng));
          if (!is_simple(g) || !is_connected(g)) continue;
          CheegerOptions opts;
          opts.guard = guard;
          opts.method = CheegerMethod::Subsets;
          Rational h = cheeger_exact(g, opts).h;
          if (h < target) continue;
          base = {"random(seed=" + std::to_string(seed) + ",attempt=" + std::to_string(attempt) + ")", std::move(g),
                  std::move(h)};
          found = true;
        }
        if (!found) throw CertificationFailure("no sampled cubic graph on " + std::to_string(2 * m) +
                                               " vertices reached h >= 2/11");
      }
    }
    cache->emplace(m, base);
    return base;
  };
}

FamilyMember expander_family(const FamilyPlan& plan, int g, const BaseProvider& base) {
  if (g < 1) throw PreconditionError("genus must be at least 1");
  FamilyMember out;
  out.genus = g;
  if (g < plan.genus_at(plan.m0)) {
    auto p = first_connected_partition(2 * g, 2);
    if (!p) throw InternalInconsistency("F_{2g,2} has no connected member");
    out.graph = build_graph(*p);
    out.fallback = true;
    out.base_name = "first-connected";
    return out;
  }
  int m = plan.m0;
  while (plan.genus_at(m + 1) <= g) ++m;
  out.m = m;
  out.u = g - plan.genus_at(m);

  const BaseGraph b = base(m);
  const MultiGraph planted = plant_trees(b.graph, plan.k);
  const int loops = plan.loops_at(m) + out.u;
  const auto pendants = planted.boundary_vertices();
  if (loops < 0 || loops > static_cast<int>(pendants.size()))
    throw InternalInconsistency("family needs more loops than there are pendant vertices");
  out.graph = add_loops(planted, std::vector<int>(pendants.begin(), pendants.begin() + loops));
  out.base_name = b.name;
  out.h_lower = planted_cheeger_bound(b.h, plan.k);
  return out;
}

}  // namespace expander_forge
