#pragma once

// Cheeger constant h(G) = min |dOmega| / |Omega| over 1 <= |Omega| <= |V|/2.
//
// The minimum is attained by some Omega with both Omega and its complement
// connected, so exact searches only visit such sets. Two exact routes:
//
//   Subsets: grow every connected Omega with |Omega| <= |V|/2 and keep those
//            whose complement is connected. Cost grows with |V|.
//   Bonds:   a cut with both sides connected is a bond, and a bond of a
//            connected graph has at most |E| - |V| + 2 edges (loops
//            excluded). Every bond meets a fixed spanning tree in a set S of
//            tree edges that determines the cut, so enumerating small S is
//            exhaustive. Cost grows with the cycle rank, not with |V|, which
//            suits tree-like graphs with many pendant vertices.
//
// Ties are broken by smaller |Omega|, then by the lexicographically
// smallest sorted vertex list, so both routes return the same witness.

#include <cstdint>
#include <vector>

#include "expander_forge/exact.hpp"
#include "expander_forge/graph.hpp"

namespace expander_forge {

inline constexpr int kDefaultCheegerGuard = 24;

/// EXPANDER_FORGE_GUARD if set to a positive integer, else `fallback`.
int guard_from_env(int fallback = kDefaultCheegerGuard);

enum class CheegerMethod { Auto, Subsets, Bonds };

struct CheegerOptions {
  /// Subsets route: at most `guard` vertices (hard cap 64). Bonds route:
  /// at most 2^guard tree-edge subsets.
  int guard = kDefaultCheegerGuard;
  CheegerMethod method = CheegerMethod::Auto;
};

struct CheegerCertificate {
  Rational h;
  std::vector<int> witness;  // sorted vertex ids of Omega
  int boundary_size = 0;
  bool exact = false;
};

/// Number of tree-edge subsets the bonds route would visit without pruning.
BigInt bond_search_size(const MultiGraph& g);

/// Throws PreconditionError for disconnected graphs or |V| < 2 and
/// GuardExceeded when the chosen route is over budget. Auto uses subsets
/// when |V| <= guard and bonds otherwise.
CheegerCertificate cheeger_exact(const MultiGraph& g, const CheegerOptions& opts = {});

/// Upper bound from the eigenvector of lambda1: the best prefix cut of the
/// vertex order it induces, or with sweep = false the single sign split.
CheegerCertificate cheeger_upper(const MultiGraph& g, bool sweep = true);

/// |dOmega| for a vertex list; loops never count, parallel edges do.
int cut_size(const MultiGraph& g, const std::vector<int>& omega);

}  // namespace expander_forge
