#pragma once

// First-moment machinery for small-ratio cuts in F_{chi,n}.
//
// For a vertex set Omega with a boundary vertices, b interior vertices and
// |dOmega| = s, the expected number of such connected sets in a uniform
// member of F_{chi,n} is bounded by the product of
//
//   X = (3b)! (3chi - 3b)! / (3chi)!
//   Y = 2^s M! / (s! p! q!)      M = (3chi - n)/2, p = (3b - a - s)/2,
//                                q = (3chi - n - (3b - a) - s)/2
//   Z = C(n, a) C(chi, b)
//
// with Y = 0 whenever p or q is negative or not an integer.

#include <compare>
#include <cstdint>
#include <map>
#include <vector>

#include "expander_forge/exact.hpp"
#include "expander_forge/graph.hpp"

namespace expander_forge {

struct MuPairBound {
  Rational x;
  Rational y;
  Rational z;
  Rational product;
};

/// 1 <= a + b <= (chi + n)/2, 1 <= s <= mu (a + b) and b >= a + s - 2, all
/// compared exactly.
bool is_mu_pair(int a, int b, int s, int chi, int n, const Rational& mu);

/// Throws ParityError for bad (chi, n) and PreconditionError unless
/// 0 <= a <= n, 0 <= b <= chi and s >= 0.
MuPairBound xyz_bound(int chi, int n, int a, int b, int s);

struct MuPairTerm {
  int a = 0;
  int b = 0;
  int s = 0;
  MuPairBound bound;
};

/// Every mu-pair for (chi, n, mu) with its bound, ordered by (b, a, s).
std::vector<MuPairTerm> mu_pair_terms(int chi, int n, const Rational& mu);

/// Sum of xyz_bound(...).product over all mu-pairs.
Rational mu_pair_sum(int chi, int n, const Rational& mu);

/// Which connected sets are counted.
///   All:           every connected Omega (the plain definition).
///   PendantClosed: connected Omega with b >= 1 that contain every boundary
///                  vertex adjacent to them, so no pendant edge is cut. The
///                  X*Y*Z count only ever places boundary half-edges of
///                  Omega inside it, so this is the class it bounds.
enum class SubsetClass { All, PendantClosed };

inline constexpr int kCountInteriorGuard = 20;

struct CountKey {
  int a = 0;
  int b = 0;
  int s = 0;
  friend auto operator<=>(const CountKey&, const CountKey&) = default;
};

/// Number of connected vertex sets with a boundary vertices, b interior
/// vertices and s boundary edges. 0 for disconnected graphs. Throws
/// GuardExceeded beyond `guard` interior vertices and PreconditionError if
/// a boundary vertex is not a pendant of an interior vertex.
BigInt count_Nabs(const MultiGraph& g, int a, int b, int s, SubsetClass cls = SubsetClass::All,
                  int guard = kCountInteriorGuard);

/// All nonzero counts with b <= max_b in one pass.
std::map<CountKey, BigInt> count_Nabs_table(const MultiGraph& g, int max_b, SubsetClass cls = SubsetClass::All,
                                            int guard = kCountInteriorGuard);

/// Mean of count_Nabs over the whole family, by enumeration.
Rational exact_first_moment(int chi, int n, int a, int b, int s, SubsetClass cls = SubsetClass::All);

struct AuditReport {
  int chi = 0;
  int n = 0;
  int a = 0;
  int b = 0;
  int s = 0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  SubsetClass cls = SubsetClass::All;
  double estimate = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
  Rational bound;
  double bound_float = 0.0;
  bool pass = false;  // ci_low <= bound
};

/// Monte Carlo estimate of the mean count with a 95% normal interval,
/// checked against the X*Y*Z product.
AuditReport audit_first_moment(int chi, int n, int a, int b, int s, std::uint64_t trials, std::uint64_t seed,
                               SubsetClass cls = SubsetClass::All);

}  // namespace expander_forge
