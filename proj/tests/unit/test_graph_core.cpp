#include <doctest.h>

#include <sstream>

#include "oracles.hpp"
#include "expander_forge/errors.hpp"
#include "expander_forge/exact.hpp"
#include "expander_forge/graph.hpp"
#include "expander_forge/graph_io.hpp"
#include "fixtures.hpp"

using namespace expander_forge;

TEST_SUITE("graph_core") {

TEST_CASE("validate_partition accepts good partitions and rejects the rest") {
  const std::vector<LabelPair> star{{1, 4}, {2, 5}, {3, 6}};
  CHECK(validate_partition(1, 3, star));
  const std::vector<LabelPair> boundary_pair{{1, 2}, {3, 4}, {5, 6}};
  CHECK_FALSE(validate_partition(1, 3, boundary_pair));
  const std::vector<LabelPair> short_list{{1, 4}, {2, 5}};
  CHECK_FALSE(validate_partition(1, 3, short_list));
  const std::vector<LabelPair> repeated{{1, 4}, {1, 5}, {3, 6}};
  CHECK_FALSE(validate_partition(1, 3, repeated));
  const std::vector<LabelPair> one{{1, 2}};
  CHECK_THROWS_AS(validate_partition(1, 2, one), ParityError);
  CHECK_THROWS_AS(validate_partition(0, 0, {}), ParityError);
}

TEST_CASE("parameter parity") {
  CHECK(valid_parameters(1, 3));
  CHECK(valid_parameters(2, 0));
  CHECK(valid_parameters(3, 1));
  CHECK_FALSE(valid_parameters(1, 2));
  CHECK_FALSE(valid_parameters(1, 5));
  CHECK_FALSE(valid_parameters(2, -2));
  CHECK_THROWS_AS(require_valid_parameters(2, 1), ParityError);
}

TEST_CASE("HalfEdgePairing rejects pairings that are not good partitions") {
  const std::vector<LabelPair> bad{{1, 2}, {3, 4}, {5, 6}};
  CHECK_THROWS_AS(HalfEdgePairing(1, 3, bad), PreconditionError);
  const std::vector<LabelPair> good{{3, 4}, {1, 6}, {2, 5}};
  const HalfEdgePairing p(1, 3, good);
  CHECK(p.partner(1) == 6);
  CHECK(p.partner(6) == 1);
  CHECK(p.pairs() == std::vector<LabelPair>{{1, 6}, {2, 5}, {3, 4}});
}

TEST_CASE("build_graph examples") {
  SUBCASE("star") {
    const std::vector<LabelPair> pairs{{1, 4}, {2, 5}, {3, 6}};
    const MultiGraph g = build_graph(HalfEdgePairing(1, 3, pairs));
    CHECK(g.degrees() == std::vector<int>{3, 1, 1, 1});
    CHECK(g == fixture::star());
    CHECK(topology(g) == Topology{1, 1, 0});
  }
  SUBCASE("loop plus pendant") {
    const std::vector<LabelPair> pairs{{1, 2}, {3, 4}};
    const MultiGraph g = build_graph(HalfEdgePairing(1, 1, pairs));
    CHECK(g.edge_count() == 2);
    CHECK(g.degree(0) == 3);
    CHECK(g.loop_count(0) == 1);
    CHECK(g.neighbors(0) == std::vector<int>{1});
    CHECK(topology(g) == Topology{1, 0, 1});
  }
  SUBCASE("theta graph") {
    const std::vector<LabelPair> pairs{{1, 4}, {2, 5}, {3, 6}};
    const MultiGraph g = build_graph(HalfEdgePairing(2, 0, pairs));
    CHECK(g == fixture::theta());
    CHECK(g.neighbors(0) == std::vector<int>{1, 1, 1});
    CHECK(topology(g) == Topology{1, -1, 2});
  }
}

TEST_CASE("connected_components") {
  CHECK(connected_components(fixture::star()) == std::vector<std::vector<int>>{{0, 1, 2, 3}});
  const MultiGraph two_loops({Role::Interior, Role::Boundary, Role::Interior, Role::Boundary},
                             {{0, 0}, {0, 1}, {2, 2}, {2, 3}});
  CHECK(connected_components(two_loops) == std::vector<std::vector<int>>{{0, 1}, {2, 3}});
  CHECK_FALSE(is_connected(two_loops));
  CHECK(topology(two_loops).components == 2);
  CHECK(is_connected(MultiGraph({Role::Interior}, {})));
}

TEST_CASE("topology rejects degrees other than 1 and 3") {
  const MultiGraph path({Role::Interior, Role::Interior, Role::Boundary}, {{0, 1}, {1, 2}});
  CHECK_THROWS_AS(topology(path), PreconditionError);
}

TEST_CASE("every small family member glues into a model graph") {
  for (int chi = 1; chi <= 3; ++chi)
    for (int n = 0; n <= 3 * chi; ++n) {
      if (!valid_parameters(chi, n)) continue;
      CAPTURE(chi);
      CAPTURE(n);
      oracle::all_partitions(chi, n, [&](const std::vector<LabelPair>& pairs) {
        const MultiGraph g = build_graph(HalfEdgePairing(chi, n, pairs));
        REQUIRE(g.interior_count() == chi);
        REQUIRE(g.boundary_count() == n);
        for (int v = 0; v < g.vertex_count(); ++v) REQUIRE(g.degree(v) == (g.role(v) == Role::Interior ? 3 : 1));
        for (const Edge& e : g.edges()) REQUIRE((g.role(e.u) == Role::Interior || g.role(e.v) == Role::Interior));
        const Topology t = topology(g);
        if (t.components == 1) REQUIRE(t.euler_char == 1 - t.genus);
        REQUIRE(t.genus == (chi - n) / 2 + 1);
      });
    }
}

TEST_CASE("edge_boundary_size counts parallel edges and ignores loops") {
  const MultiGraph g = fixture::theta();
  CHECK(edge_boundary_size(g, {true, false}) == 3);
  const MultiGraph lp = fixture::loop_pendant();
  CHECK(edge_boundary_size(lp, {true, false}) == 1);
}

TEST_CASE("graph text round trip") {
  for (const auto& s : fixture::connected_samples(40, 6, 11)) {
    const std::string text = to_graph_text(s.graph);
    const MultiGraph back = parse_graph_text(text);
    CHECK(back == s.graph);
    CHECK(to_graph_text(back) == text);
  }
  const MultiGraph lp = parse_graph_text("# comment\nG 1 1\n\nE v1 v1\nE v1 w1  # pendant\n");
  CHECK(lp == fixture::loop_pendant());
  CHECK(vertex_name(lp, 0) == "v1");
  CHECK(vertex_name(lp, 1) == "w1");
}

TEST_CASE("graph text parse errors") {
  CHECK_THROWS_AS(parse_graph_text(""), ParseError);
  CHECK_THROWS_AS(parse_graph_text("G 1\n"), ParseError);
  CHECK_THROWS_AS(parse_graph_text("G 1 1\nE v1 w2\n"), ParseError);
  CHECK_THROWS_AS(parse_graph_text("G 1 1\nX v1 w1\n"), ParseError);
  CHECK_THROWS_AS(parse_graph_text("G 1 1\nE v1 q1\n"), ParseError);
}

TEST_CASE("exact helpers") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(10) == 3628800);
  CHECK(binomial(9, 3) == 84);
  CHECK(binomial(3, 5) == 0);
  CHECK(perfect_matchings(0) == 1);
  CHECK(perfect_matchings(3) == 15);
  CHECK(perfect_matchings(4) == 105);
  const FactorialTable ft(20);
  CHECK(ft(20) == factorial(20));
  CHECK(parse_rational("1/50") == Rational(1, 50));
  CHECK(parse_rational("0.02") == Rational(1, 50));
  CHECK(parse_rational("-2") == -2);
  CHECK(parse_rational("2.5e-3") == Rational(1, 400));
  CHECK(parse_rational("0.1") == Rational(1, 10));
  CHECK_THROWS_AS(parse_rational("abc"), ParseError);
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK(to_string(Rational(8, 11)) == "8/11");
  CHECK(to_string(Rational(4, 2)) == "2");
  CHECK(to_double(Rational(1, 4)) == 0.25);
}

}
