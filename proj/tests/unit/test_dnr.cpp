#include "doctest.h"
#include "haarforge/autsearch.hpp"
#include "haarforge/dnr.hpp"

using namespace haarforge;

TEST_CASE("standard automorphisms") {
  for (long long n = 3; n <= 12; ++n)
    for (long long r = 1; r < n; ++r) {
      if (2 * r == n) continue;
      const auto s = standard_automorphisms(n, r);
      CHECK(s.alpha.order() == static_cast<std::size_t>(n));
      CHECK(s.beta.order() == 2);
      CHECK(s.gamma.order() == 2);
      CHECK(compose(s.alpha, s.beta) == compose(s.beta, s.alpha));
      const auto aut = automorphism_group(double_generalized_petersen(n, r).graph);
      CHECK(membership(aut, s.alpha));
      CHECK(membership(aut, s.beta));
      CHECK(membership(aut, s.gamma));
    }
}

TEST_CASE("delta for m odd") {
  const auto d = delta_automorphism(10, 3);
  const DgpLabeling lab{10};
  CHECK(d.delta[lab.u(0)] == lab.v(1));
  CHECK(d.delta[lab.u(1)] == lab.w(4));
  const auto g = double_generalized_petersen(10, 3);
  CHECK(g.edge_class(d.delta[lab.u(0)], d.delta[lab.u(1)]) == DgpEdgeClass::inner);
  CHECK(d.normalized_r == 3);
  CHECK(d.normalizing_map.is_identity());
}

TEST_CASE("delta for m even") {
  const auto d = delta_automorphism(4, 1);
  const auto g = double_generalized_petersen(4, 1).graph;
  for (const auto& [a, b] : g.edges()) CHECK(g.adjacent(d.delta[a], d.delta[b]));
  const auto d20 = delta_automorphism(20, 3);
  CHECK(PermGroup(80, {power(standard_automorphisms(20, 3).alpha, 2), d20.delta}).order() == 40);
  // m = 10 even: w and z images are shifted by m.
  const DgpLabeling lab{20};
  CHECK(d20.delta[lab.w(0)] == lab.z(11));
  CHECK(d20.delta[lab.w(1)] == lab.u(14));
}

TEST_CASE("delta normalization") {
  // r = 2 is even with m = 5 odd, so the search runs on r' = 3 through the
  // half turn of the w and z layers.
  const auto d = delta_automorphism(10, 2);
  CHECK(d.normalized_r == 3);
  CHECK_FALSE(d.normalizing_map.is_identity());
  const auto g = double_generalized_petersen(10, 2).graph;
  for (const auto& [a, b] : g.edges()) CHECK(g.adjacent(d.delta[a], d.delta[b]));
  CHECK(delta_automorphism(10, 7).normalized_r == 3);
  CHECK(delta_automorphism(10, 8).normalized_r == 3);
  CHECK(delta_automorphism(26, 21).normalized_r == 5);
  CHECK_THROWS_AS(delta_automorphism(12, 5), DeltaError);
  CHECK_THROWS_AS(delta_automorphism(9, 2), DeltaError);
  CHECK_THROWS_AS(delta_automorphism(10, 5), std::invalid_argument);
}

TEST_CASE("haar witnesses") {
  for (auto [n, r] : std::vector<std::pair<long long, long long>>{{4, 1}, {10, 3}, {10, 2}, {20, 3}, {26, 5}, {34, 4}}) {
    const auto w = verify_haar_witness(n, r);
    CHECK(w.preserves_edges);
    CHECK(w.preserves_parts);
    CHECK(w.conjugation_sign != 0);
    CHECK(w.group_order == 2 * n);
    CHECK(w.regular_on_part0);
    CHECK(w.regular_on_part1);
    CHECK(w.matches_semidirect);
    CHECK(w.passed());
  }
  CHECK_THROWS_AS(verify_haar_witness(12, 5), DeltaError);
}

TEST_CASE("predictions") {
  auto p = predict_dnr(5, 2);
  CHECK(p.vertex_transitive);
  CHECK_FALSE(p.cayley);
  CHECK_FALSE(p.haar);
  CHECK(p.branch == DnrBranch::dodecahedral_exception);
  CHECK(predict_dnr(5, 3).branch == DnrBranch::dodecahedral_exception);
  p = predict_dnr(12, 5);
  CHECK((p.vertex_transitive && p.cayley && p.haar));
  CHECK(p.branch == DnrBranch::square_residue);
  CHECK(p.m == 6);
  p = predict_dnr(10, 2);
  CHECK((p.vertex_transitive && !p.cayley && p.haar));
  CHECK(p.branch == DnrBranch::negative_residue);
  p = predict_dnr(7, 2);
  CHECK_FALSE(p.vertex_transitive);
  CHECK(p.branch == DnrBranch::odd_or_nonresidue);
  CHECK_FALSE(p.m);
  CHECK(predict_dnr(14, 2).branch == DnrBranch::odd_or_nonresidue);
  CHECK(predict_dnr(4, 1).branch == DnrBranch::square_residue);
  CHECK_THROWS_AS(predict_dnr(10, 5), std::invalid_argument);
}

TEST_CASE("theorem sweep") {
  const auto results = verify_theorems(14, 2);
  std::size_t expected = 0;
  for (long long n = 3; n <= 14; ++n) expected += n - 1 - (n % 2 == 0);
  CHECK(results.size() == expected);
  for (std::size_t i = 1; i < results.size(); ++i)
    CHECK(std::pair(results[i - 1].n, results[i - 1].r) < std::pair(results[i].n, results[i].r));
  for (const auto& c : results) {
    INFO("D(" << c.n << "," << c.r << ")");
    CHECK(c.matches());
    CHECK((c.orbit_count == 1 || c.orbit_count == 2));
    if (c.n % 2 == 0) CHECK(c.haar == c.vertex_transitive);
  }
}

TEST_CASE("corollary family") {
  for (long long r = 2; r <= 4; ++r) {
    const long long m = r * r + 1;
    const auto c = check_dnr(2 * m, r);
    CHECK(c.haar);
    CHECK(c.vertex_transitive);
    CHECK_FALSE(c.cayley);
  }
}
