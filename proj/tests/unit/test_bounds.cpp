#include <doctest.h>

#include "oracles.hpp"
#include "expander_forge/bounds.hpp"
#include "expander_forge/errors.hpp"
#include "expander_forge/report.hpp"
#include "expander_forge/sampler.hpp"
#include "fixtures.hpp"

using namespace expander_forge;

namespace {

// Membership test written out from the definition, independent of is_mu_pair.
bool mu_pair_by_definition(int a, int b, int s, int chi, int n, const Rational& mu) {
  const int size = a + b;
  if (size < 1 || 2 * size > chi + n) return false;
  if (s < 1 || Rational(s) > mu * size) return false;
  return b >= a + s - 2;
}

Rational brute_force_sum(int chi, int n, const Rational& mu) {
  Rational total = 0;
  for (int a = 0; a <= n; ++a)
    for (int b = 0; b <= chi; ++b)
      for (int s = 0; s <= 3 * chi + n; ++s)
        if (mu_pair_by_definition(a, b, s, chi, n, mu)) total += oracle::xyz(chi, n, a, b, s);
  total.canonicalize();
  return total;
}

}  // namespace

TEST_SUITE("bounds") {

TEST_CASE("mu-pair membership") {
  CHECK(is_mu_pair(0, 1, 1, 4, 2, Rational(3, 2)));
  CHECK_FALSE(is_mu_pair(0, 1, 1, 4, 2, Rational(1, 2)));
  CHECK_FALSE(is_mu_pair(0, 0, 1, 4, 2, 10));
  CHECK_FALSE(is_mu_pair(2, 0, 1, 4, 2, 10));
  CHECK_FALSE(is_mu_pair(0, 4, 1, 4, 2, 10));
  for (int chi = 1; chi <= 6; ++chi)
    for (int n = 0; n <= 3 * chi; ++n) {
      if (!valid_parameters(chi, n)) continue;
      for (const Rational mu : {Rational(1, 2), Rational(3, 2), Rational(1, 50)})
        for (int a = 0; a <= n; ++a)
          for (int b = 0; b <= chi; ++b)
            for (int s = 0; s <= 6; ++s) CHECK(is_mu_pair(a, b, s, chi, n, mu) == mu_pair_by_definition(a, b, s, chi, n, mu));
    }
}

TEST_CASE("xyz examples") {
  const auto regression = xyz_bound(4, 2, 0, 1, 1);
  CHECK(regression.product == Rational(8, 11));
  const auto odd = xyz_bound(4, 2, 0, 1, 2);
  CHECK(odd.y == 0);
  CHECK(odd.product == 0);
  const auto whole = xyz_bound(3, 1, 1, 3, 0);
  CHECK(whole.x == 1);
  const auto cubic_whole = xyz_bound(2, 0, 0, 2, 0);
  CHECK(cubic_whole.x == 1);
  CHECK(cubic_whole.z == 1);
  CHECK(cubic_whole.y == oracle::xyz(2, 0, 0, 2, 0));
  CHECK_THROWS_AS(xyz_bound(4, 2, 3, 1, 1), PreconditionError);
  CHECK_THROWS_AS(xyz_bound(4, 2, 0, 5, 1), PreconditionError);
  CHECK_THROWS_AS(xyz_bound(4, 2, 0, 1, -1), PreconditionError);
  CHECK_THROWS_AS(xyz_bound(4, 1, 0, 1, 1), ParityError);
}

TEST_CASE("xyz matches the factorial formulas") {
  for (int chi = 1; chi <= 5; ++chi)
    for (int n = 0; n <= 3 * chi; ++n) {
      if (!valid_parameters(chi, n)) continue;
      for (int a = 0; a <= n; ++a)
        for (int b = 0; b <= chi; ++b)
          for (int s = 0; s <= 3 * b + a + 2; ++s) {
            const auto got = xyz_bound(chi, n, a, b, s);
            CHECK(got.product == oracle::xyz(chi, n, a, b, s));
            CHECK(got.x * got.y * got.z == got.product);
          }
    }
}

TEST_CASE("mu-pair sums") {
  CHECK(mu_pair_sum(10, 0, Rational(1, 50)) == 0);
  CHECK(mu_pair_sum(4, 2, Rational(1, 2)) == brute_force_sum(4, 2, Rational(1, 2)));
  CHECK(mu_pair_sum(4, 2, Rational(1, 2)) == Rational(8, 7));
  for (auto [chi, n] : std::vector<std::pair<int, int>>{{5, 1}, {6, 4}, {9, 3}, {12, 0}})
    for (const Rational mu : {Rational(1, 3), Rational(1), Rational(5, 2)}) {
      const Rational want = brute_force_sum(chi, n, mu);
      CHECK(mu_pair_sum(chi, n, mu) == want);
      Rational from_terms = 0;
      int prev_b = -1;
      for (const auto& t : mu_pair_terms(chi, n, mu)) {
        CHECK(t.b >= prev_b);
        prev_b = t.b;
        from_terms += t.bound.product;
      }
      CHECK(from_terms == want);
    }
}

TEST_CASE("mu-pair table at 3/2 contains the 8/11 entry") {
  bool found = false;
  for (const auto& t : mu_pair_terms(4, 2, Rational(3, 2)))
    if (t.a == 0 && t.b == 1 && t.s == 1) {
      found = true;
      CHECK(t.bound.product == Rational(8, 11));
      const Json j = to_json(t);
      CHECK(j.at("product") == "8/11");
    }
  CHECK(found);
}

TEST_CASE("connected set counts") {
  const MultiGraph star = fixture::star();
  CHECK(count_Nabs(star, 1, 0, 1) == 3);
  CHECK(count_Nabs(star, 0, 1, 3) == 1);
  CHECK(count_Nabs(star, 2, 1, 1) == 3);
  CHECK(count_Nabs(star, 3, 1, 0) == 1);
  CHECK(count_Nabs(star, 1, 1, 2) == 3);
  CHECK(count_Nabs(star, 0, 1, 3, SubsetClass::PendantClosed) == 0);
  CHECK(count_Nabs(star, 3, 1, 0, SubsetClass::PendantClosed) == 1);
  CHECK(count_Nabs(star, 1, 0, 1, SubsetClass::PendantClosed) == 0);

  CHECK(count_Nabs(fixture::theta(), 0, 1, 3) == 2);

  const MultiGraph two_loops({Role::Interior, Role::Boundary, Role::Interior, Role::Boundary},
                             {{0, 0}, {0, 1}, {2, 2}, {2, 3}});
  CHECK(count_Nabs(two_loops, 1, 1, 0) == 0);

  CHECK_THROWS_AS(count_Nabs(star, 1, 0, 1, SubsetClass::All, 0), GuardExceeded);
}

TEST_CASE("counts match subset enumeration") {
  for (const auto& s : fixture::connected_samples(80, 5, 55)) {
    const MultiGraph& g = s.graph;
    if (g.vertex_count() > 14) continue;
    const auto table = count_Nabs_table(g, s.chi);
    const auto closed = count_Nabs_table(g, s.chi, SubsetClass::PendantClosed);
    for (int a = 0; a <= s.n; ++a)
      for (int b = 0; b <= s.chi; ++b)
        for (int cut = 0; cut <= 3 * b + a; ++cut) {
          const long want = oracle::count_sets(g, a, b, cut);
          const long want_closed = oracle::count_sets(g, a, b, cut, true);
          CHECK(count_Nabs(g, a, b, cut) == want);
          CHECK(count_Nabs(g, a, b, cut, SubsetClass::PendantClosed) == want_closed);
          const auto it = table.find({a, b, cut});
          CHECK((it == table.end() ? BigInt(0) : it->second) == want);
          const auto jt = closed.find({a, b, cut});
          CHECK((jt == closed.end() ? BigInt(0) : jt->second) == want_closed);
        }
  }
}

TEST_CASE("first moments") {
  CHECK(exact_first_moment(1, 3, 1, 0, 1) == 3);
  // The X*Y*Z product places every boundary half-edge of Omega inside it, so
  // a lone boundary vertex gets bound 0 although the star has three.
  CHECK(xyz_bound(1, 3, 1, 0, 1).product == 0);
  CHECK(exact_first_moment(1, 3, 1, 0, 1, SubsetClass::PendantClosed) == 0);
  CHECK(exact_first_moment(2, 0, 0, 1, 3) == Rational(4, 5));
  CHECK(exact_first_moment(2, 0, 0, 1, 3) <= xyz_bound(2, 0, 0, 1, 3).product);
}

TEST_CASE("Monte Carlo audit") {
  const auto literal = audit_first_moment(1, 3, 1, 0, 1, 200, 42);
  CHECK(literal.estimate == 3.0);
  CHECK(literal.bound == 0);
  CHECK_FALSE(literal.pass);
  const auto closed = audit_first_moment(1, 3, 1, 0, 1, 200, 42, SubsetClass::PendantClosed);
  CHECK(closed.estimate == 0.0);
  CHECK(closed.pass);
  const auto mid = audit_first_moment(4, 2, 0, 1, 1, 2000, 7);
  CHECK(mid.bound == Rational(8, 11));
  const auto vacuous = audit_first_moment(4, 2, 1, 1, 1, 300, 7, SubsetClass::PendantClosed);
  CHECK(vacuous.bound == 0);
  CHECK(vacuous.estimate == 0.0);
  const Json j = to_json(mid);
  CHECK(j.at("subsets") == "all");
  CHECK(j.at("ci").size() == 2);
}

}
