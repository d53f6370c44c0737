#include <sstream>

#include "doctest.h"
#include "fixtures.hpp"
#include "haarforge/autsearch.hpp"
#include "haarforge/constructions.hpp"

using namespace haarforge;

TEST_CASE("graph basics") {
  const Graph g(4, {{0, 1}, {2, 1}, {3, 0}});
  CHECK(g.edge_count() == 3);
  CHECK(g.adjacent(1, 2));
  CHECK_FALSE(g.adjacent(0, 2));
  CHECK(g.degree_sequence() == std::vector<std::size_t>{1, 1, 2, 2});
  CHECK_FALSE(g.regular_valency());
  CHECK_THROWS_AS(Graph(3, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);

  std::stringstream ss;
  write_adjacency_list(ss, g);
  CHECK(read_adjacency_list(ss) == g);
  std::istringstream asym("3\n0: 1\n1:\n2:\n");
  CHECK_THROWS(read_adjacency_list(asym));
}

TEST_CASE("cayley graphs") {
  const auto c7 = cayley_graph(cyclic(7), ElementSubset(cyclic(7), {1, 6}));
  CHECK(is_isomorphic(c7, fixtures::cycle(7)));
  const auto v4 = fixtures::klein();
  CHECK(cayley_graph(v4, ElementSubset(v4, {1, 2, 3})) == fixtures::complete(4));
  const auto z6 = cyclic(6);
  const auto g = cayley_graph(z6, ElementSubset(z6, {2, 3, 4}));
  CHECK(g.regular_valency() == 3u);
  CHECK(g.adjacent(0, 2));
  CHECK(g.adjacent(2, 4));
  CHECK(g.adjacent(0, 4));
  CHECK_FALSE(bipartition(g));
  CHECK_THROWS_AS(cayley_graph(z6, ElementSubset(z6, {0, 1, 5})), std::invalid_argument);
  CHECK_THROWS_AS(cayley_graph(z6, ElementSubset(z6, {1})), std::invalid_argument);
}

TEST_CASE("right multiplication is a regular group of automorphisms of a cayley graph") {
  for (const auto& grp : fixtures::small_groups()) {
    const auto s = fixtures::inverse_closed_subset(grp, generating_set(grp));
    const auto g = cayley_graph(grp, ElementSubset(grp, s));
    for (Element a = 0; a < grp.order(); ++a) {
      for (const auto& [x, y] : g.edges()) CHECK(g.adjacent(grp.mul(x, a), grp.mul(y, a)));
    }
  }
}

TEST_CASE("haar graphs") {
  const auto k2 = haar_graph(cyclic(1), ElementSubset(cyclic(1), {0}));
  CHECK(k2 == fixtures::complete(2));
  const auto z3 = cyclic(3);
  const auto k33 = haar_graph(z3, ElementSubset(z3, {0, 1, 2}));
  CHECK(k33.edge_count() == 9);
  CHECK(girth(k33) == 4u);
  for (const auto& grp : fixtures::small_groups()) {
    const ElementSubset s(grp, {0, 1, static_cast<Element>(grp.order() - 1)});
    const auto h = haar_graph(grp, s);
    CHECK(h.order() == 2 * grp.order());
    CHECK(h.edge_count() == grp.order() * s.size());
    CHECK(h.regular_valency() == s.size());
    const auto bp = bipartition(h);
    REQUIRE(bp);
    for (Vertex v = 0; v < h.order(); ++v) CHECK(bp->side[v] == (v < grp.order() ? 0 : 1));
  }
  CHECK_THROWS_AS(haar_graph(z3, ElementSubset()), std::invalid_argument);
}

TEST_CASE("bi-cayley graphs") {
  const auto z5 = cyclic(5);
  const ElementSubset s(z5, {0, 1, 3});
  CHECK(bicayley_graph(z5, {}, {}, s) == haar_graph(z5, s));
  const auto z3 = cyclic(3);
  const auto prism = bicayley_graph(z3, ElementSubset(z3, {1, 2}), ElementSubset(z3, {1, 2}), ElementSubset(z3, {0}));
  CHECK(prism.order() == 6);
  CHECK(prism.edge_count() == 9);
  CHECK(girth(prism) == 3u);
  CHECK(prism.regular_valency() == 3u);
}

TEST_CASE("bi-cayley presentation of D(n,r)") {
  // Elements of Z_n x Z_2 are (a, b) -> 2a + b; alpha = (1,0), beta = (0,1).
  for (auto [n, r] : std::vector<std::pair<int, int>>{{5, 2}, {7, 3}, {10, 2}, {12, 5}}) {
    const auto grp = direct_product(cyclic(n), cyclic(2));
    auto el = [&](int a, int b) { return static_cast<Element>(2 * (((a % n) + n) % n) + b); };
    const auto g = bicayley_graph(grp, ElementSubset(grp, {el(1, 0), el(-1, 0)}),
                                  ElementSubset(grp, {el(r, 1), el(-r, 1)}), ElementSubset(grp, {0}));
    CHECK(is_isomorphic(g, double_generalized_petersen(n, r).graph));
  }
}

TEST_CASE("generalized Petersen graphs") {
  const auto p = generalized_petersen(5, 2);
  CHECK(p.order() == 10);
  CHECK(p.edge_count() == 15);
  CHECK(girth(p) == 5u);
  const auto cube = generalized_petersen(4, 1);
  CHECK(bipartition(cube));
  CHECK(girth(cube) == 4u);
  const auto dodecahedron = generalized_petersen(10, 2);
  CHECK(dodecahedron.order() == 20);
  CHECK(girth(dodecahedron) == 5u);
  CHECK_THROWS_AS(generalized_petersen(6, 3), std::invalid_argument);
  CHECK_THROWS_AS(generalized_petersen(6, 0), std::invalid_argument);
  CHECK_THROWS_AS(generalized_petersen(2, 1), std::invalid_argument);
}

TEST_CASE("double generalized Petersen graphs") {
  const auto d = double_generalized_petersen(10, 2);
  CHECK(d.graph.order() == 40);
  CHECK(d.graph.edge_count() == 60);
  CHECK(d.labeling.name(d.labeling.w(3)) == "w3");
  CHECK(d.labeling.u(-1) == 9u);
  CHECK(d.edge_class(d.labeling.u(0), d.labeling.u(1)) == DgpEdgeClass::outer);
  CHECK(d.edge_class(d.labeling.w(4), d.labeling.z(4)) == DgpEdgeClass::spoke);
  CHECK(d.edge_class(d.labeling.v(0), d.labeling.w(2)) == DgpEdgeClass::inner);
  CHECK(is_isomorphic(double_generalized_petersen(5, 2).graph, generalized_petersen(10, 2)));
  for (long long n = 3; n <= 20; ++n)
    for (long long r = 1; r < n; ++r) {
      if (2 * r == n) continue;
      const auto g = double_generalized_petersen(n, r).graph;
      CHECK(g.order() == static_cast<std::size_t>(4 * n));
      CHECK(g.edge_count() == static_cast<std::size_t>(6 * n));
      CHECK(g.regular_valency() == 3u);
      CHECK(is_connected(g));
      CHECK(bipartition(g).has_value() == (n % 2 == 0));
    }
  CHECK_THROWS_AS(double_generalized_petersen(8, 4), std::invalid_argument);
}

TEST_CASE("edge classes partition D(n,r)") {
  const auto d = double_generalized_petersen(12, 5);
  std::size_t counts[3] = {0, 0, 0};
  for (const auto& [a, b] : d.graph.edges()) ++counts[static_cast<int>(d.edge_class(a, b))];
  CHECK(counts[0] == 24);
  CHECK(counts[1] == 24);
  CHECK(counts[2] == 24);
}

TEST_CASE("sigma0 tetracirculants") {
  const auto s = cyclic_cover_sigma0(5, 1, 4, 1);
  CHECK(s.order() == 20);
  CHECK(s.regular_valency() == 3u);
  for (auto [n, r] : std::vector<std::pair<int, int>>{{5, 2}, {7, 2}, {10, 2}, {12, 5}}) {
    const auto g = cyclic_cover_sigma0(n, 1, 2 * r, 1);
    CHECK(g.order() == static_cast<std::size_t>(4 * n));
    CHECK(g.edge_count() == static_cast<std::size_t>(6 * n));
    CHECK(is_isomorphic(g, double_generalized_petersen(n, r).graph));
  }
}

TEST_CASE("kronecker covers") {
  const auto two_k2 = kronecker_cover(fixtures::complete(2));
  CHECK(two_k2.order() == 4);
  CHECK(two_k2.edge_count() == 2);
  CHECK_FALSE(is_connected(two_k2));
  CHECK(is_isomorphic(kronecker_cover(fixtures::cycle(3)), fixtures::cycle(6)));
  CHECK(is_isomorphic(kronecker_cover(generalized_petersen(10, 2)), double_generalized_petersen(10, 2).graph));
}

TEST_CASE("voltage double covers") {
  const auto p = generalized_petersen(5, 2);
  const auto trivial = voltage_double_cover(p, {});
  CHECK(connected_components(trivial) == [] {
    std::vector<std::size_t> c(20, 0);
    std::fill(c.begin() + 10, c.end(), 1);
    return c;
  }());
  const auto all = p.edges();
  CHECK(voltage_double_cover(p, std::vector<Edge>(all.begin(), all.end())) == kronecker_cover(p));
  const auto desargues_cover = voltage_double_cover(generalized_petersen(10, 3), petersen_inner_edges(10, 3));
  CHECK(is_isomorphic(desargues_cover, double_generalized_petersen(10, 3).graph));
  CHECK(is_isomorphic(voltage_double_cover(generalized_petersen(7, 2), petersen_inner_edges(7, 2)),
                     double_generalized_petersen(7, 2).graph));
  // Deck involution.
  const std::size_t n = desargues_cover.order() / 2;
  for (const auto& [a, b] : desargues_cover.edges())
    CHECK(desargues_cover.adjacent(static_cast<Vertex>((a + n) % (2 * n)), static_cast<Vertex>((b + n) % (2 * n))));
  CHECK_THROWS_AS(voltage_double_cover(p, {{0, 2}}), std::invalid_argument);
}

TEST_CASE("bipartition and girth") {
  const auto bp = bipartition(double_generalized_petersen(10, 2).graph);
  REQUIRE(bp);
  CHECK(bp->part0.size() == 20);
  CHECK(bp->part1.size() == 20);
  CHECK_FALSE(bipartition(double_generalized_petersen(5, 2).graph));
  const auto c4 = bipartition(fixtures::cycle(4));
  REQUIRE(c4);
  CHECK(c4->part0 == std::vector<Vertex>{0, 2});
  CHECK(c4->part1 == std::vector<Vertex>{1, 3});
  CHECK(girth(double_generalized_petersen(10, 2).graph) == 8u);
  CHECK_FALSE(girth(fixtures::path(5)));
}
