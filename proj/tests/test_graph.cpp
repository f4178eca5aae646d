#include <catch2/catch_amalgamated.hpp>

#include "forcing/enumerate.hpp"
#include "forcing/graph.hpp"
#include "forcing/graph_io.hpp"

using namespace forcing;

TEST_CASE("standard constructors", "[graph]") {
  Graph k3 = complete(3);
  CHECK(k3.order() == 3);
  CHECK(k3.edge_count() == 3);

  Graph m2 = matching(2);
  CHECK(m2.order() == 4);
  CHECK(m2.adjacent(0, 1));
  CHECK(m2.adjacent(2, 3));
  CHECK(m2.edge_count() == 2);

  Graph c5 = cycle(5);
  CHECK(c5.order() == 5);
  CHECK(c5.edge_count() == 5);
  CHECK(c5.adjacent(4, 0));

  CHECK(path(4).edge_count() == 3);
  CHECK(empty_graph(3).edge_count() == 0);
  CHECK(matching(0).order() == 0);

  CHECK_THROWS_AS(cycle(2), precondition_error);
  CHECK_THROWS_AS(Graph(2, {{0, 0}}), precondition_error);
  CHECK_THROWS_AS(Graph(2, {{0, 5}}), precondition_error);
  CHECK_THROWS_AS(Graph(70), capacity_error);
}

TEST_CASE("cartesian product", "[graph]") {
  Graph q = cartesian_product(complete(2), complete(2));
  CHECK(q.order() == 4);
  CHECK(q.edge_count() == 4);
  // Labeled 4-cycle 0-1-3-2-0.
  CHECK(q.adjacent(0, 1));
  CHECK(q.adjacent(1, 3));
  CHECK(q.adjacent(3, 2));
  CHECK(q.adjacent(2, 0));
  CHECK_FALSE(q.adjacent(0, 3));

  Graph prism = cartesian_product(complete(3), complete(2));
  CHECK(prism.order() == 6);
  CHECK(prism.edge_count() == 9);

  Graph big = cartesian_product(cycle(5), complete(2));
  CHECK(big.order() == 10);
  CHECK(big.edge_count() == 15);

  CHECK_THROWS_AS(cartesian_product(complete(9), complete(8)), capacity_error);
}

TEST_CASE("categorical product", "[graph]") {
  Graph d = categorical_product(complete(2), complete(2));
  CHECK(d.order() == 4);
  CHECK(d.edge_count() == 2);
  CHECK(d.adjacent(0, 3));
  CHECK(d.adjacent(1, 2));

  Graph rook = categorical_product(complete(3), complete(3));
  CHECK(rook.order() == 9);
  CHECK(rook.edge_count() == 18);

  Graph iso = categorical_product(cycle(5), empty_graph(1));
  CHECK(iso.order() == 5);
  CHECK(iso.edge_count() == 0);
}

TEST_CASE("product identities on all small pairs", "[graph]") {
  // Labeled identity: (a,b) ~ (a,b') iff bb' in E(H); (a,b) ~ (a',b) iff
  // aa' in E(G); plus the edge-count formulas for both products.
  std::vector<Graph> pool;
  for (int n = 1; n <= 4; ++n)
    for (std::uint64_t m = 0; m < edge_mask_count(n); ++m)
      pool.push_back(graph_from_edge_mask(n, m));
  REQUIRE(pool.size() == 1 + 2 + 8 + 64);

  for (const Graph& g : pool)
    for (const Graph& h : pool) {
      Graph cart = cartesian_product(g, h);
      Graph cat = categorical_product(g, h);
      REQUIRE(cart.edge_count() == g.order() * h.edge_count() + h.order() * g.edge_count());
      REQUIRE(cat.edge_count() == 2 * g.edge_count() * h.edge_count());
      int hn = h.order();
      for (int a = 0; a < g.order(); ++a) {
        for (int b = 0; b < hn; ++b) {
          for (int b2 = 0; b2 < hn; ++b2)
            if (b != b2)
              REQUIRE(cart.adjacent(a * hn + b, a * hn + b2) == h.adjacent(b, b2));
          for (int a2 = 0; a2 < g.order(); ++a2)
            if (a != a2)
              REQUIRE(cart.adjacent(a * hn + b, a2 * hn + b) == g.adjacent(a, a2));
        }
      }
    }
}

TEST_CASE("complement, union, components", "[graph]") {
  CHECK(complement(complete(3)) == empty_graph(3));
  CHECK(complement(empty_graph(3)) == complete(3));
  CHECK(disjoint_union(complete(2), complete(2)) == matching(2));

  auto comps = connected_components(matching(3));
  REQUIRE(comps.size() == 3);
  for (std::size_t i = 0; i < comps.size(); ++i) {
    CHECK(comps[i].size() == 2);
    CHECK(comps[i].smallest() == static_cast<int>(2 * i));
  }
  CHECK(is_connected(cycle(4)));
  CHECK_FALSE(is_connected(matching(2)));
}

TEST_CASE("graph6 parsing of known strings", "[graph]") {
  Graph one = parse_graph6("@");
  CHECK(one.order() == 1);
  CHECK(one.edge_count() == 0);

  CHECK(parse_graph6("A_") == complete(2));
  CHECK(parse_graph6("Bw") == complete(3));
  CHECK(parse_graph6("?").order() == 0);

  CHECK(emit_graph6(complete(3)) == "Bw");
  CHECK(emit_graph6(complete(2)) == "A_");
  CHECK(emit_graph6(Graph(1)) == "@");
}

TEST_CASE("graph6 round-trips on all graphs with <= 6 vertices", "[graph]") {
  for (int n = 1; n <= 6; ++n)
    for (std::uint64_t m = 0; m < edge_mask_count(n); ++m) {
      Graph g = graph_from_edge_mask(n, m);
      REQUIRE(parse_graph6(emit_graph6(g)) == g);
    }
}

TEST_CASE("graph6 long-form header", "[graph]") {
  Graph g = cycle(63);
  std::string s = emit_graph6(g);
  CHECK(s.size() == 4 + (static_cast<std::size_t>(63) * 62 / 2 + 5) / 6);
  CHECK(parse_graph6(s) == g);
  CHECK(parse_graph6(emit_graph6(complete(64))) == complete(64));
}

TEST_CASE("graph6 error reporting", "[graph]") {
  CHECK_THROWS_AS(parse_graph6(""), parse_error);
  CHECK_THROWS_AS(parse_graph6("A"), parse_error);      // truncated payload
  CHECK_THROWS_AS(parse_graph6("Bw~"), parse_error);    // trailing garbage
  CHECK_THROWS_AS(parse_graph6("B "), parse_error);     // out-of-range char
  CHECK_THROWS_AS(parse_graph6("~?@@"), capacity_error);  // order 65

  try {
    parse_graph6("B ");
    FAIL("expected parse_error");
  } catch (const parse_error& e) {
    CHECK(e.offset() == 1);
  }
}

TEST_CASE("dimacs col round-trip", "[graph]") {
  Graph p3 = parse_dimacs("c a comment\np edge 3 2\ne 1 2\ne 2 3\n");
  CHECK(p3 == path(3));
  CHECK(parse_dimacs(emit_dimacs(cycle(5))) == cycle(5));
  CHECK(emit_dimacs(path(3)) == "p edge 3 2\ne 1 2\ne 2 3\n");

  CHECK_THROWS_AS(parse_dimacs("e 1 2\n"), parse_error);
  CHECK_THROWS_AS(parse_dimacs("p edge 2 1\ne 1 5\n"), parse_error);
  CHECK_THROWS_AS(parse_dimacs("p edge 2 1\nx 1 2\n"), parse_error);
  CHECK_THROWS_AS(parse_dimacs(""), parse_error);
}

TEST_CASE("vertex sets", "[graph]") {
  VertexSet s;
  s.add(3);
  s.add(0);
  CHECK(s.size() == 2);
  CHECK(s.contains(3));
  CHECK(s.smallest() == 0);
  CHECK(s.members() == std::vector<int>{0, 3});
  s.remove(0);
  CHECK(s.members() == std::vector<int>{3});
}

TEST_CASE("labeled enumeration counts", "[graph]") {
  CHECK(labeled_graph_count(3) == 11);
  int connected_count = 0;
  enumerate_graphs(3, filters::connected, [&](const Graph&) { ++connected_count; });
  CHECK(connected_count == 6);
  int chi3_count = 0;
  enumerate_graphs(2, filters::chromatic_at_least_3, [&](const Graph&) { ++chi3_count; });
  CHECK(chi3_count == 0);
  CHECK_THROWS_AS(labeled_graph_count(8), capacity_error);
}
