#pragma once

// Brute-force reference implementations used only by tests. They share no
// code with the library beyond the graph container.

#include <gmpxx.h>

#include <Eigen/Dense>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <vector>

#include "expander_forge/graph.hpp"

namespace oracle {

using expander_forge::Edge;
using expander_forge::MultiGraph;
using expander_forge::Role;

// All good partitions of {1..3chi+n}: the smallest unpaired label is matched
// with every admissible partner in turn.
inline void all_partitions(int chi, int n, const std::function<void(const std::vector<std::pair<int, int>>&)>& visit) {
  const int total = 3 * chi + n;
  std::vector<char> used(static_cast<std::size_t>(total) + 1, 0);
  std::vector<std::pair<int, int>> pairs;
  std::function<void()> rec = [&] {
    int first = 1;
    while (first <= total && used[first]) ++first;
    if (first > total) {
      visit(pairs);
      return;
    }
    used[first] = 1;
    for (int other = first + 1; other <= total; ++other) {
      if (used[other] || std::min(first, other) > 3 * chi) continue;
      used[other] = 1;
      pairs.emplace_back(first, other);
      rec();
      pairs.pop_back();
      used[other] = 0;
    }
    used[first] = 0;
  };
  rec();
}

inline MultiGraph glue(int chi, int n, const std::vector<std::pair<int, int>>& pairs) {
  std::vector<Role> roles(static_cast<std::size_t>(chi + n), Role::Boundary);
  for (int i = 0; i < chi; ++i) roles[i] = Role::Interior;
  auto owner = [&](int l) { return l <= 3 * chi ? (l - 1) / 3 : chi + l - 3 * chi - 1; };
  std::vector<Edge> edges;
  for (auto [a, b] : pairs) edges.emplace_back(owner(a), owner(b));
  return MultiGraph(std::move(roles), std::move(edges));
}

inline bool connected_by_search(const MultiGraph& g, std::uint64_t mask) {
  if (mask == 0) return false;
  const int start = __builtin_ctzll(mask);
  std::uint64_t seen = std::uint64_t{1} << start;
  bool grew = true;
  while (grew) {
    grew = false;
    for (const Edge& e : g.edges()) {
      const auto bu = std::uint64_t{1} << e.u;
      const auto bv = std::uint64_t{1} << e.v;
      if ((mask & bu) && (mask & bv) && ((seen & bu) != 0) != ((seen & bv) != 0)) {
        seen |= bu | bv;
        grew = true;
      }
    }
  }
  return seen == mask;
}

inline int boundary_of(const MultiGraph& g, std::uint64_t mask) {
  int b = 0;
  for (const Edge& e : g.edges())
    if (((mask >> e.u) & 1) != ((mask >> e.v) & 1)) ++b;
  return b;
}

// Minimum of |dS|/|S| over every non-empty S with |S| <= |V|/2.
inline mpq_class cheeger_all_subsets(const MultiGraph& g) {
  const int nv = g.vertex_count();
  mpq_class best = -1;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << nv); ++mask) {
    const int size = __builtin_popcountll(mask);
    if (2 * size > nv) continue;
    mpq_class r(boundary_of(g, mask), size);
    r.canonicalize();
    if (best < 0 || r < best) best = r;
  }
  return best;
}

// Connected sets with a boundary and b interior vertices and s cut edges.
inline long count_sets(const MultiGraph& g, int a, int b, int s, bool pendant_closed = false) {
  const int nv = g.vertex_count();
  long count = 0;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << nv); ++mask) {
    int ca = 0;
    int cb = 0;
    for (int v = 0; v < nv; ++v)
      if ((mask >> v) & 1) (g.role(v) == Role::Boundary ? ca : cb)++;
    if (ca != a || cb != b || boundary_of(g, mask) != s || !connected_by_search(g, mask)) continue;
    if (pendant_closed) {
      if (b == 0) continue;
      bool closed = true;
      for (const Edge& e : g.edges()) {
        const bool in_u = (mask >> e.u) & 1;
        const bool in_v = (mask >> e.v) & 1;
        if (in_u != in_v && (g.role(e.u) == Role::Boundary || g.role(e.v) == Role::Boundary)) closed = false;
      }
      if (!closed) continue;
    }
    ++count;
  }
  return count;
}

inline mpz_class fact(long k) {
  mpz_class r = 1;
  for (long i = 2; i <= k; ++i) r *= i;
  return r;
}

inline mpz_class choose(long n, long k) {
  if (k < 0 || k > n) return 0;
  return fact(n) / (fact(k) * fact(n - k));
}

// X * Y * Z from the factorial formulas, term by term.
inline mpq_class xyz(int chi, int n, int a, int b, int s) {
  const long p2 = 3L * b - a - s;
  const long q2 = 3L * chi - n - (3L * b - a) - s;
  if (p2 < 0 || q2 < 0 || p2 % 2 || q2 % 2) return 0;
  mpq_class x(fact(3L * b) * fact(3L * chi - 3L * b), fact(3L * chi));
  mpz_class two_s = 1;
  for (int i = 0; i < s; ++i) two_s *= 2;
  mpq_class y(two_s * fact((3L * chi - n) / 2), fact(s) * fact(p2 / 2) * fact(q2 / 2));
  mpq_class z(choose(n, a) * choose(chi, b));
  x.canonicalize();
  y.canonicalize();
  mpq_class prod = x * y * z;
  prod.canonicalize();
  return prod;
}

// Normalized Laplacian eigenvalues from the quadratic form, built edge by
// edge: each non-loop edge contributes (e_u/sqrt(d_u) - e_v/sqrt(d_v))^2.
inline std::vector<double> normalized_spectrum(const MultiGraph& g) {
  const int nv = g.vertex_count();
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(nv, nv);
  for (const Edge& e : g.edges()) {
    if (e.is_loop()) continue;
    Eigen::VectorXd x = Eigen::VectorXd::Zero(nv);
    x[e.u] += 1.0 / std::sqrt(static_cast<double>(g.degree(e.u)));
    x[e.v] -= 1.0 / std::sqrt(static_cast<double>(g.degree(e.v)));
    m += x * x.transpose();
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
  return {es.eigenvalues().data(), es.eigenvalues().data() + nv};
}

// Steklov eigenvalues by solving the interior Dirichlet problem for each
// boundary basis vector with a dense solver.
inline std::vector<double> steklov_by_extension(const MultiGraph& g) {
  const int nv = g.vertex_count();
  Eigen::MatrixXd l = Eigen::MatrixXd::Zero(nv, nv);
  for (const Edge& e : g.edges()) {
    if (e.is_loop()) continue;
    l(e.u, e.u) += 1;
    l(e.v, e.v) += 1;
    l(e.u, e.v) -= 1;
    l(e.v, e.u) -= 1;
  }
  std::vector<int> in, out;
  for (int v = 0; v < nv; ++v) (g.role(v) == Role::Interior ? in : out).push_back(v);
  const int ni = static_cast<int>(in.size());
  const int nb = static_cast<int>(out.size());
  Eigen::MatrixXd dtn(nb, nb);
  for (int j = 0; j < nb; ++j) {
    Eigen::MatrixXd a(ni, ni);
    Eigen::VectorXd rhs(ni);
    for (int r = 0; r < ni; ++r) {
      for (int c = 0; c < ni; ++c) a(r, c) = l(in[r], in[c]);
      rhs[r] = -l(in[r], out[j]);
    }
    const Eigen::VectorXd inner = a.fullPivLu().solve(rhs);
    Eigen::VectorXd f = Eigen::VectorXd::Zero(nv);
    f[out[j]] = 1.0;
    for (int r = 0; r < ni; ++r) f[in[r]] = inner[r];
    const Eigen::VectorXd lf = l * f;
    for (int i = 0; i < nb; ++i) dtn(i, j) = lf[out[i]];
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (dtn + dtn.transpose()));
  return {es.eigenvalues().data(), es.eigenvalues().data() + nb};
}

}  // namespace oracle
