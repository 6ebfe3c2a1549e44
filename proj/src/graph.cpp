#include "expander_forge/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "expander_forge/errors.hpp"

namespace expander_forge {

bool valid_parameters(int chi, int n) {
  if (chi < 1 || n < 0) return false;
  const long diff = 3L * chi - n;
  return diff >= 0 && diff % 2 == 0;
}

void require_valid_parameters(int chi, int n) {
  if (chi < 1) throw ParityError("chi must be at least 1, got " + std::to_string(chi));
  if (n < 0) throw ParityError("n must be non-negative, got " + std::to_string(n));
  const long diff = 3L * chi - n;
  if (diff < 0) throw ParityError("3*chi - n is negative for chi=" + std::to_string(chi) + ", n=" + std::to_string(n));
  if (diff % 2 != 0) throw ParityError("3*chi - n is odd for chi=" + std::to_string(chi) + ", n=" + std::to_string(n));
}

namespace {

// Returns the partner table, or an empty vector if `pairs` is not a good
// partition of {1..3chi+n}.
std::vector<int> partner_table(int chi, int n, std::span<const LabelPair> pairs) {
  const int total = 3 * chi + n;
  if (static_cast<long>(pairs.size()) * 2 != total) return {};
  std::vector<int> partner(static_cast<std::size_t>(total) + 1, 0);
  for (auto [i, j] : pairs) {
    if (i < 1 || j < 1 || i > total || j > total || i == j) return {};
    if (partner[i] != 0 || partner[j] != 0) return {};
    if (std::min(i, j) > 3 * chi) return {};
    partner[i] = j;
    partner[j] = i;
  }
  return partner;
}

}  // namespace

bool validate_partition(int chi, int n, std::span<const LabelPair> pairs) {
  require_valid_parameters(chi, n);
  return !partner_table(chi, n, pairs).empty();
}

HalfEdgePairing::HalfEdgePairing(int chi, int n, std::span<const LabelPair> pairs) : chi_(chi), n_(n) {
  require_valid_parameters(chi, n);
  partner_ = partner_table(chi, n, pairs);
  if (partner_.empty()) throw PreconditionError("label pairs do not form a good partition");
}

HalfEdgePairing::HalfEdgePairing(int chi, int n, std::vector<int> partner, bool)
    : chi_(chi), n_(n), partner_(std::move(partner)) {}

HalfEdgePairing HalfEdgePairing::from_partners(int chi, int n, std::vector<int> partner) {
  require_valid_parameters(chi, n);
  const int total = 3 * chi + n;
  if (static_cast<int>(partner.size()) != total + 1) throw PreconditionError("partner table has wrong size");
  for (int l = 1; l <= total; ++l) {
    const int p = partner[l];
    if (p < 1 || p > total || p == l || partner[p] != l || std::min(l, p) > 3 * chi)
      throw PreconditionError("partner table is not a good partition");
  }
  return HalfEdgePairing(chi, n, std::move(partner), true);
}

std::vector<LabelPair> HalfEdgePairing::pairs() const {
  std::vector<LabelPair> out;
  out.reserve(static_cast<std::size_t>(label_count()) / 2);
  for (int l = 1; l <= label_count(); ++l)
    if (l < partner_[l]) out.emplace_back(l, partner_[l]);
  return out;
}

MultiGraph::MultiGraph(std::vector<Role> roles, std::vector<Edge> edges)
    : roles_(std::move(roles)), edges_(std::move(edges)) {
  const auto nv = roles_.size();
  degree_.assign(nv, 0);
  loops_.assign(nv, 0);
  adjacency_.assign(nv, {});
  for (const Edge& e : edges_) {
    if (e.u < 0 || e.v < 0 || static_cast<std::size_t>(e.v) >= nv || static_cast<std::size_t>(e.u) >= nv)
      throw PreconditionError("edge endpoint out of range");
    if (e.is_loop()) {
      degree_[e.u] += 2;
      loops_[e.u] += 1;
    } else {
      degree_[e.u] += 1;
      degree_[e.v] += 1;
      adjacency_[e.u].push_back(e.v);
      adjacency_[e.v].push_back(e.u);
    }
  }
}

int MultiGraph::interior_count() const {
  return static_cast<int>(std::count(roles_.begin(), roles_.end(), Role::Interior));
}

int MultiGraph::boundary_count() const {
  return static_cast<int>(std::count(roles_.begin(), roles_.end(), Role::Boundary));
}

std::vector<int> MultiGraph::boundary_vertices() const {
  std::vector<int> out;
  for (int v = 0; v < vertex_count(); ++v)
    if (roles_[v] == Role::Boundary) out.push_back(v);
  return out;
}

std::vector<int> MultiGraph::interior_vertices() const {
  std::vector<int> out;
  for (int v = 0; v < vertex_count(); ++v)
    if (roles_[v] == Role::Interior) out.push_back(v);
  return out;
}

bool operator==(const MultiGraph& a, const MultiGraph& b) {
  if (a.roles_ != b.roles_) return false;
  auto ea = a.edges_;
  auto eb = b.edges_;
  std::sort(ea.begin(), ea.end());
  std::sort(eb.begin(), eb.end());
  return ea == eb;
}

MultiGraph build_graph(const HalfEdgePairing& p) {
  const int chi = p.chi();
  auto owner = [chi](int label) { return label <= 3 * chi ? (label - 1) / 3 : chi + (label - 3 * chi - 1); };

  std::vector<Role> roles(static_cast<std::size_t>(chi + p.n()), Role::Boundary);
  std::fill(roles.begin(), roles.begin() + chi, Role::Interior);

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(p.label_count()) / 2);
  for (auto [i, j] : p.pairs()) edges.emplace_back(owner(i), owner(j));
  return MultiGraph(std::move(roles), std::move(edges));
}

std::vector<std::vector<int>> connected_components(const MultiGraph& g) {
  const int nv = g.vertex_count();
  std::vector<int> comp(static_cast<std::size_t>(nv), -1);
  std::vector<std::vector<int>> out;
  std::vector<int> stack;
  for (int s = 0; s < nv; ++s) {
    if (comp[s] != -1) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    comp[s] = id;
    stack.push_back(s);
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      out[id].push_back(v);
      for (int w : g.neighbors(v))
        if (comp[w] == -1) {
          comp[w] = id;
          stack.push_back(w);
        }
    }
    std::sort(out[id].begin(), out[id].end());
  }
  return out;
}

bool is_connected(const MultiGraph& g) { return connected_components(g).size() <= 1; }

Topology topology(const MultiGraph& g) {
  int deg3 = 0;
  int deg1 = 0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    const int d = g.degree(v);
    if (d == 3)
      ++deg3;
    else if (d == 1)
      ++deg1;
    else
      throw PreconditionError("vertex " + std::to_string(v) + " has degree " + std::to_string(d) + ", expected 1 or 3");
  }
  Topology t;
  t.components = static_cast<int>(connected_components(g).size());
  t.euler_char = g.vertex_count() - g.edge_count();
  // deg3 + deg1 is even because 3*deg3 + deg1 = 2|E|.
  t.genus = (deg3 - deg1) / 2 + 1;
  return t;
}

int edge_boundary_size(const MultiGraph& g, const std::vector<bool>& in_set) {
  int count = 0;
  for (const Edge& e : g.edges())
    if (in_set[e.u] != in_set[e.v]) ++count;
  return count;
}

}  // namespace expander_forge
