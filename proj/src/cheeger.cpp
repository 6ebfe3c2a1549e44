#include "expander_forge/cheeger.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <numeric>
#include <queue>
#include <string>

#include "detail/connected_sets.hpp"
#include "expander_forge/errors.hpp"
#include "expander_forge/spectra.hpp"

namespace expander_forge {

namespace {

// Running minimum under the certificate order: ratio, then size, then the
// lexicographic order of sorted vertex lists.
struct BestCut {
  bool found = false;
  int boundary = 0;
  int size = 0;
  std::vector<int> omega;

  // -1 if (b, s) beats the current best on ratio and size alone, 0 on a
  // full tie that needs the lexicographic comparison, 1 otherwise.
  int compare(int b, int s) const {
    if (!found) return -1;
    const long lhs = static_cast<long>(b) * size;
    const long rhs = static_cast<long>(boundary) * s;
    if (lhs != rhs) return lhs < rhs ? -1 : 1;
    if (s != size) return s < size ? -1 : 1;
    return 0;
  }

  void take(int b, std::vector<int> set) {
    found = true;
    boundary = b;
    size = static_cast<int>(set.size());
    omega = std::move(set);
  }

  void offer(int b, std::vector<int> set) {
    const int c = compare(b, static_cast<int>(set.size()));
    if (c < 0 || (c == 0 && set < omega)) take(b, std::move(set));
  }

  CheegerCertificate certificate(bool exact) const {
    CheegerCertificate cert;
    cert.h = Rational(boundary, size);
    cert.h.canonicalize();
    cert.witness = omega;
    cert.boundary_size = boundary;
    cert.exact = exact;
    return cert;
  }
};

void require_cut_input(const MultiGraph& g) {
  if (g.vertex_count() < 2) throw PreconditionError("Cheeger constant needs at least 2 vertices");
  if (!is_connected(g)) throw PreconditionError("Cheeger constant needs a connected graph");
}

std::vector<int> mask_to_ids(const detail::LocalGraph& lg, detail::Mask set) {
  std::vector<int> ids;
  for (; set; set &= set - 1) ids.push_back(lg.vertices[std::countr_zero(set)]);
  std::sort(ids.begin(), ids.end());
  return ids;
}

CheegerCertificate exact_by_subsets(const MultiGraph& g) {
  std::vector<int> all(static_cast<std::size_t>(g.vertex_count()));
  std::iota(all.begin(), all.end(), 0);
  const auto lg = detail::make_local(g, all);
  const detail::Mask full = lg.all();

  bool found = false;
  int best_b = 0;
  int best_s = 0;
  detail::Mask best_set = 0;
  // Local ids equal graph ids here, so for equal-size sets the lexicographic
  // order of sorted lists is decided by the lowest differing bit.
  auto visit = [&](detail::Mask set, int size, int boundary) {
    if (found) {
      const long lhs = static_cast<long>(boundary) * best_s;
      const long rhs = static_cast<long>(best_b) * size;
      if (lhs > rhs) return;
      if (lhs == rhs) {
        if (size > best_s) return;
        if (size == best_s) {
          const detail::Mask diff = set ^ best_set;
          if (!(diff & (~diff + 1) & set)) return;
        }
      }
    }
    if (!lg.connected(full & ~set)) return;
    found = true;
    best_b = boundary;
    best_s = size;
    best_set = set;
  };
  detail::for_each_connected_set(lg, g.vertex_count() / 2, visit);

  BestCut best;
  best.take(best_b, mask_to_ids(lg, best_set));
  return best.certificate(true);
}

struct BondSearch {
  const MultiGraph& g;
  std::vector<Edge> tree_edges;      // candidate edges of a spanning tree
  std::vector<std::vector<std::pair<int, int>>> tree_adj;  // (neighbour, candidate index or -1)
  int max_cut = 0;
  BestCut best;
  // Ratio of some known cut; searches whose ratio must exceed it are cut off.
  // Ties are kept so the witness order is unaffected.
  int prune_num = 0;
  int prune_den = 0;

  explicit BondSearch(const MultiGraph& graph) : g(graph) {
    const int nv = g.vertex_count();
    tree_adj.assign(nv, {});
    std::vector<char> seen(nv, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      for (int u : g.neighbors(v)) {
        if (seen[u]) continue;
        seen[u] = 1;
        q.push(u);
        int idx = -1;
        if (g.degree(u) != 1 && g.degree(v) != 1) {
          idx = static_cast<int>(tree_edges.size());
          tree_edges.emplace_back(u, v);
        }
        tree_adj[v].emplace_back(u, idx);
        tree_adj[u].emplace_back(v, idx);
      }
    }
    int nonloop = 0;
    for (const Edge& e : g.edges()) nonloop += e.is_loop() ? 0 : 1;
    max_cut = nonloop - nv + 2;
  }

  BigInt search_size() const {
    BigInt total = 0;
    const auto t = static_cast<unsigned long>(tree_edges.size());
    for (unsigned long j = 1; j <= t && static_cast<long>(j) <= max_cut; ++j) total += binomial(t, j);
    return total;
  }

  void run() {
    const int nv = g.vertex_count();
    // Pendant cuts; with two vertices both sides tie and vertex 0 wins.
    for (int v = 0; v < nv; ++v)
      if (g.degree(v) == 1) best.offer(1, {nv == 2 ? 0 : v});
    std::vector<char> removed(tree_edges.size(), 0);
    choose(0, 0, removed);
  }

 private:
  void choose(std::size_t from, int chosen, std::vector<char>& removed) {
    const int half = g.vertex_count() / 2;
    for (std::size_t i = from; i < tree_edges.size(); ++i) {
      const int size = chosen + 1;
      // Every chosen tree edge crosses the cut, and |Omega| <= half.
      if (best.found && static_cast<long>(size) * best.size > static_cast<long>(best.boundary) * half) return;
      if (prune_den > 0 && static_cast<long>(size) * prune_den > static_cast<long>(prune_num) * half) return;
      removed[i] = 1;
      evaluate(removed);
      if (size < max_cut) choose(i + 1, size, removed);
      removed[i] = 0;
    }
  }

  void evaluate(const std::vector<char>& removed) {
    const int nv = g.vertex_count();
    // Two-colour the tree so that exactly the removed edges change colour.
    std::vector<int> side(nv, -1);
    side[0] = 0;
    std::vector<int> stack{0};
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (const auto& [u, idx] : tree_adj[v]) {
        if (side[u] >= 0) continue;
        side[u] = side[v] ^ ((idx >= 0 && removed[idx]) ? 1 : 0);
        stack.push_back(u);
      }
    }
    int cut = 0;
    for (const Edge& e : g.edges())
      if (side[e.u] != side[e.v]) ++cut;
    if (cut > max_cut) return;
    const int ones = static_cast<int>(std::count(side.begin(), side.end(), 1));
    // With equal sides the one holding vertex 0 is lexicographically first.
    const int omega_side = ones < nv - ones ? 1 : 0;
    const int omega_size = omega_side == 1 ? ones : nv - ones;
    if (best.compare(cut, omega_size) > 0) return;
    if (!side_connected(side, 0) || !side_connected(side, 1)) return;
    std::vector<int> omega;
    for (int v = 0; v < nv; ++v)
      if (side[v] == omega_side) omega.push_back(v);
    best.offer(cut, std::move(omega));
  }

  bool side_connected(const std::vector<int>& side, int which) const {
    const int nv = g.vertex_count();
    int start = -1;
    int total = 0;
    for (int v = 0; v < nv; ++v)
      if (side[v] == which) {
        if (start < 0) start = v;
        ++total;
      }
    if (start < 0) return false;
    std::vector<char> seen(nv, 0);
    std::vector<int> stack{start};
    seen[start] = 1;
    int reached = 1;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int u : g.neighbors(v))
        if (!seen[u] && side[u] == which) {
          seen[u] = 1;
          ++reached;
          stack.push_back(u);
        }
    }
    return reached == total;
  }
};

BigInt power_of_two(int k) {
  BigInt r = 1;
  mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), static_cast<mp_bitcnt_t>(std::max(k, 0)));
  return r;
}

}  // namespace

int guard_from_env(int fallback) {
  const char* raw = std::getenv("EXPANDER_FORGE_GUARD");
  if (!raw || !*raw) return fallback;
  int value = 0;
  const char* end = raw + std::strlen(raw);
  const auto [ptr, ec] = std::from_chars(raw, end, value);
  if (ec != std::errc() || ptr != end || value < 1) return fallback;
  return value;
}

BigInt bond_search_size(const MultiGraph& g) {
  require_cut_input(g);
  return BondSearch(g).search_size();
}

CheegerCertificate cheeger_exact(const MultiGraph& g, const CheegerOptions& opts) {
  require_cut_input(g);
  const int nv = g.vertex_count();
  const int subset_cap = std::min(opts.guard, detail::kMaxLocalVertices);
  const auto subsets_ok = [&] { return nv <= subset_cap; };

  CheegerMethod method = opts.method;
  if (method == CheegerMethod::Auto) method = subsets_ok() ? CheegerMethod::Subsets : CheegerMethod::Bonds;

  if (method == CheegerMethod::Subsets) {
    if (!subsets_ok())
      throw GuardExceeded("exact Cheeger search over subsets: " + std::to_string(nv) + " vertices exceeds guard " +
                          std::to_string(subset_cap));
    return exact_by_subsets(g);
  }
  BondSearch search(g);
  const BigInt work = search.search_size();
  if (work > power_of_two(opts.guard))
    throw GuardExceeded("exact Cheeger search over bonds: " + work.get_str() + " tree-edge subsets exceeds 2^" +
                        std::to_string(opts.guard));
  const CheegerCertificate hint = cheeger_upper(g, true);
  search.prune_num = hint.boundary_size;
  search.prune_den = static_cast<int>(hint.witness.size());
  search.run();
  return search.best.certificate(true);
}

CheegerCertificate cheeger_upper(const MultiGraph& g, bool sweep) {
  require_cut_input(g);
  const int nv = g.vertex_count();
  const std::vector<double> x = fiedler_vector(g);
  std::vector<int> order(static_cast<std::size_t>(nv));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return x[a] < x[b]; });

  auto prefix_cut = [&](int len) {
    std::vector<int> prefix(order.begin(), order.begin() + len);
    std::vector<int> rest(order.begin() + len, order.end());
    std::vector<int>& omega = len <= nv - len ? prefix : rest;
    std::sort(omega.begin(), omega.end());
    return omega;
  };

  BestCut best;
  if (!sweep) {
    int len = static_cast<int>(std::count_if(x.begin(), x.end(), [](double t) { return t < 0.0; }));
    if (len == 0 || len == nv) len = nv / 2;
    auto omega = prefix_cut(len);
    const int b = cut_size(g, omega);
    best.take(b, std::move(omega));
    return best.certificate(false);
  }

  std::vector<char> inside(static_cast<std::size_t>(nv), 0);
  int cut = 0;
  for (int len = 1; len < nv; ++len) {
    const int v = order[len - 1];
    int into = 0;
    for (int u : g.neighbors(v)) into += inside[u];
    cut += static_cast<int>(g.neighbors(v).size()) - 2 * into;
    inside[v] = 1;
    const int size = std::min(len, nv - len);
    if (best.compare(cut, size) < 0) best.take(cut, prefix_cut(len));
  }
  return best.certificate(false);
}

int cut_size(const MultiGraph& g, const std::vector<int>& omega) {
  std::vector<bool> in(static_cast<std::size_t>(g.vertex_count()), false);
  for (int v : omega) in.at(static_cast<std::size_t>(v)) = true;
  return edge_boundary_size(g, in);
}

}  // namespace expander_forge
