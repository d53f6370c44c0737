#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "haarforge/autsearch.hpp"
#include "haarforge/dnr.hpp"
#include "haarforge/perm_group.hpp"

using namespace haarforge;

namespace {

PermGroup symmetric(std::size_t n) {
  std::vector<Point> all(n);
  for (Point i = 0; i < n; ++i) all[i] = i;
  const Point swap[] = {0, 1};
  return PermGroup(n, {Permutation::cycle(n, all), Permutation::cycle(n, swap)});
}

}  // namespace

TEST_CASE("composition applies the left factor first") {
  const Point a[] = {0, 1};
  const Point b[] = {1, 2};
  const auto p = Permutation::cycle(3, a);
  const auto q = Permutation::cycle(3, b);
  const auto pq = compose(p, q);
  CHECK(pq[0] == q[p[0]]);
  CHECK(pq[0] == 2);
  CHECK(pq != compose(q, p));
  CHECK(compose(p, Permutation::identity(3)) == p);
  CHECK(compose(p, p.inverse()).is_identity());
  CHECK(conjugate(p, q) == compose(compose(q.inverse(), p), q));
}

TEST_CASE("permutation basics") {
  CHECK_THROWS_AS(Permutation({0, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({0, 3}), std::invalid_argument);
  const Point c[] = {0, 2, 4};
  const auto p = Permutation::cycle(6, c);
  CHECK(p.order() == 3);
  CHECK(p.fixed_point_count() == 3);
  CHECK(p.lowest_moved_point() == 0);
  CHECK(p.to_cycle_string() == "(0,2,4)");
  CHECK(power(p, -1) == p.inverse());
  CHECK(power(p, 3).is_identity());
  CHECK(Permutation::identity(4).to_cycle_string() == "()");
}

TEST_CASE("alpha squared shifts by two") {
  const auto s = standard_automorphisms(9, 2);
  const auto lab = double_generalized_petersen(9, 2).labeling;
  const auto a2 = compose(s.alpha, s.alpha);
  for (long long i = 0; i < 9; ++i) CHECK(a2[lab.u(i)] == lab.u(i + 2));
}

TEST_CASE("group orders") {
  std::vector<Point> all(7);
  for (Point i = 0; i < 7; ++i) all[i] = i;
  CHECK(group_order(PermGroup(7, {Permutation::cycle(7, all)})) == 7);
  CHECK(group_order(symmetric(6)) == 720);
  CHECK(group_order(symmetric(12)) == BigInt(479001600));
  CHECK(group_order(PermGroup(5, {})) == 1);
  CHECK(group_order(automorphism_group(double_generalized_petersen(10, 2).graph)) == 480);
  for (long long n = 3; n <= 6; ++n)
    for (long long r = 1; r < n; ++r) {
      if (2 * r == n) continue;
      const auto s = standard_automorphisms(n, r);
      const PermGroup g(4 * n, {s.alpha, s.beta, s.gamma});
      CHECK(group_order(g) % (4 * n) == 0);
      CHECK(group_order(g) == brute_force_closure(g).size());
    }
}

TEST_CASE("chain order matches brute-force closure") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 4 + trial % 4;
    std::vector<Permutation> gens;
    for (int k = 0; k < 1 + trial % 3; ++k) gens.push_back(fixtures::random_permutation(n, rng));
    const PermGroup g(n, gens);
    const auto elements = brute_force_closure(g);
    CHECK(group_order(g) == elements.size());
    for (const auto& e : elements) CHECK(membership(g, e));
  }
}

TEST_CASE("orbits") {
  const PermGroup trivial(4, {});
  CHECK(orbits(trivial).size() == 4);
  const auto s = standard_automorphisms(7, 2);
  const auto lab = double_generalized_petersen(7, 2).labeling;
  const auto o = orbits(PermGroup(28, {s.alpha, s.beta, s.gamma}));
  REQUIRE(o.size() == 2);
  for (Point x : o[0]) CHECK((lab.kind(x) == DgpLabeling::Kind::u || lab.kind(x) == DgpLabeling::Kind::z));
  for (Point x : o[1]) CHECK((lab.kind(x) == DgpLabeling::Kind::v || lab.kind(x) == DgpLabeling::Kind::w));
  CHECK(orbits(automorphism_group(double_generalized_petersen(10, 2).graph)).size() == 1);
}

TEST_CASE("orbits of a subgroup refine the group's orbits") {
  const auto aut = automorphism_group(double_generalized_petersen(7, 2).graph);
  const auto s = standard_automorphisms(7, 2);
  for (const auto& sub : {PermGroup(28, {s.alpha}), PermGroup(28, {s.beta}), PermGroup(28, {s.alpha, s.gamma})}) {
    for (const auto& gen : sub.generators()) CHECK(membership(aut, gen));
    std::vector<std::size_t> big(28);
    const auto ob = orbits(aut);
    for (std::size_t i = 0; i < ob.size(); ++i)
      for (Point x : ob[i]) big[x] = i;
    for (const auto& orbit : orbits(sub))
      for (Point x : orbit) CHECK(big[x] == big[orbit.front()]);
  }
}

TEST_CASE("membership") {
  const auto s = standard_automorphisms(6, 1);
  const PermGroup rot(24, {s.alpha});
  CHECK(membership(rot, Permutation::identity(24)));
  CHECK_FALSE(membership(rot, s.beta));
  CHECK(membership(rot, power(s.alpha, 5)));
  const auto aut = automorphism_group(double_generalized_petersen(10, 2).graph);
  CHECK(membership(aut, delta_automorphism(10, 2).delta));
  CHECK(membership(automorphism_group(double_generalized_petersen(10, 3).graph), delta_automorphism(10, 3).delta));
}

TEST_CASE("regularity") {
  const auto z5 = cyclic(5);
  std::vector<Permutation> right;
  for (Element a = 0; a < 5; ++a) {
    std::vector<Point> images(5);
    for (Element x = 0; x < 5; ++x) images[x] = z5.mul(x, a);
    right.emplace_back(images);
  }
  const std::vector<Point> all{0, 1, 2, 3, 4};
  CHECK(is_regular_on(PermGroup(5, right), all));
  const std::vector<Point> three{0, 1, 2};
  CHECK_FALSE(is_regular_on(symmetric(3), three));

  const auto w = verify_haar_witness(10, 3);
  const PermGroup g(40, w.generators);
  const auto bp = *bipartition(double_generalized_petersen(10, 3).graph);
  CHECK(is_regular_on(g, bp.part0));
  CHECK(is_regular_on(g, bp.part1));
  const std::vector<Point> not_invariant{0, 1};
  CHECK_THROWS_AS(is_regular_on(g, not_invariant), std::invalid_argument);
}

TEST_CASE("regular iff transitive of matching order") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 3 + trial % 4;
    const PermGroup g(n, {fixtures::random_permutation(n, rng), fixtures::random_permutation(n, rng)});
    std::vector<Point> all(n);
    for (Point i = 0; i < n; ++i) all[i] = i;
    const bool transitive = orbits(g).size() == 1;
    CHECK(is_regular_on(g, all) == (transitive && group_order(g) == n));
  }
}

TEST_CASE("element enumeration is capped") {
  CHECK(symmetric(5).enumerate_elements().size() == 120);
  CHECK_THROWS_AS(symmetric(8).enumerate_elements(), std::length_error);
}
