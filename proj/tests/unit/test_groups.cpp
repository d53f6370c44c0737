#include <sstream>

#include "doctest.h"
#include "fixtures.hpp"
#include "haarforge/groups.hpp"

using namespace haarforge;

TEST_CASE("cyclic tables") {
  const auto z1 = cyclic(1);
  CHECK(z1.order() == 1);
  CHECK(z1.table() == std::vector<std::vector<Element>>{{0}});
  const auto z3 = cyclic(3);
  CHECK(z3.mul(1, 2) == 0);
  CHECK(z3.inv(1) == 2);
  const auto z5 = cyclic(5);
  CHECK(z5.inv(2) == 3);
  CHECK(z5.mul(4, 4) == 3);
  CHECK(z5.name() == "Z5");
  CHECK_THROWS_AS(cyclic(0), std::invalid_argument);
}

TEST_CASE("direct products") {
  const auto z3 = direct_product(cyclic(1), cyclic(3));
  CHECK(z3.order() == 3);
  CHECK(element_order_profile(z3) == element_order_profile(cyclic(3)));
  const auto z10z2 = direct_product(cyclic(10), cyclic(2));
  CHECK(z10z2.order() == 20);
  CHECK(is_abelian(z10z2));
  const auto v4 = fixtures::klein();
  for (Element x = 1; x < 4; ++x) CHECK(v4.inv(x) == x);
}

TEST_CASE("generalized dihedral groups") {
  const auto z2 = generalized_dihedral(cyclic(1));
  CHECK(z2.order() == 2);
  CHECK(is_abelian(z2));
  const auto d5 = generalized_dihedral(cyclic(5));
  CHECK(d5.order() == 10);
  CHECK_FALSE(is_abelian(d5));
  const auto e8 = generalized_dihedral(fixtures::klein());
  CHECK(e8.order() == 8);
  CHECK(is_abelian(e8));
  for (Element x = 1; x < 8; ++x) CHECK(e8.element_order(x) == 2);
  CHECK_THROWS_AS(generalized_dihedral(generalized_dihedral(cyclic(3))), std::invalid_argument);
}

TEST_CASE("abelian iff exponent two base") {
  for (const auto& a : {cyclic(2), cyclic(3), cyclic(4), fixtures::klein(), direct_product(cyclic(2), cyclic(4))}) {
    bool exp2 = true;
    for (Element x = 0; x < a.order(); ++x) exp2 = exp2 && a.mul(x, x) == 0;
    CHECK(is_abelian(generalized_dihedral(a)) == exp2);
  }
}

TEST_CASE("semidirect cyclic groups") {
  const auto f20 = semidirect_cyclic(5, 4, 2);
  CHECK(f20.order() == 20);
  CHECK_FALSE(is_abelian(f20));
  const auto trivial_action = semidirect_cyclic(3, 4, 1);
  CHECK(is_abelian(trivial_action));
  CHECK(element_order_profile(trivial_action) == element_order_profile(direct_product(cyclic(3), cyclic(4))));
  CHECK(semidirect_cyclic(10, 4, 3).order() == 40);
  CHECK_THROWS_AS(semidirect_cyclic(6, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(semidirect_cyclic(5, 2, 2), std::invalid_argument);
}

TEST_CASE("validate_table rejects broken tables") {
  CHECK_NOTHROW(validate_table(cyclic(4).table()));
  try {
    validate_table({{0, 1}, {1, 1}});
    FAIL("accepted a table without inverses");
  } catch (const GroupAxiomError& e) {
    CHECK(std::string(e.what()).find("inverse") == 0);
  }
  CHECK_THROWS_AS(validate_table({{0, 2}, {1, 0}}), GroupAxiomError);
  CHECK_THROWS_AS(validate_table({{1, 0}, {0, 1}}), GroupAxiomError);
  // Latin square with identity that is not associative.
  const std::vector<std::vector<Element>> loop = {
      {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  try {
    validate_table(loop);
    FAIL("accepted a non-associative loop");
  } catch (const GroupAxiomError& e) {
    CHECK(std::string(e.what()).find("associativity") == 0);
  }
}

TEST_CASE("element subsets") {
  const auto z6 = cyclic(6);
  const ElementSubset s(z6, {5, 1});
  CHECK(s.members() == std::vector<Element>{1, 5});
  CHECK(s.inverse_closed(z6));
  CHECK_FALSE(ElementSubset(z6, {1, 2}).inverse_closed(z6));
  CHECK_THROWS_AS(ElementSubset(z6, {1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(ElementSubset(z6, {6}), std::invalid_argument);
}

TEST_CASE("automorphism groups of small groups") {
  CHECK(group_automorphisms(cyclic(5)).size() == 4);
  CHECK(group_automorphisms(fixtures::klein()).size() == 6);
  CHECK(group_automorphisms(generalized_dihedral(cyclic(3))).size() == 6);
  CHECK(group_automorphisms(semidirect_cyclic(5, 4, 2)).size() == 20);
  CHECK(group_automorphisms(direct_product(cyclic(10), cyclic(2))).size() == 24);
}

TEST_CASE("generating sets generate") {
  for (const auto& g : fixtures::small_groups()) {
    const auto gens = generating_set(g);
    std::vector<char> seen(g.order(), 0);
    std::vector<Element> queue{0};
    seen[0] = 1;
    for (std::size_t i = 0; i < queue.size(); ++i)
      for (Element s : gens)
        if (!seen[g.mul(queue[i], s)]) {
          seen[g.mul(queue[i], s)] = 1;
          queue.push_back(g.mul(queue[i], s));
        }
    CHECK(queue.size() == g.order());
  }
}

TEST_CASE("catalog round trip and errors") {
  const auto f20 = semidirect_cyclic(5, 4, 2);
  std::stringstream ss;
  write_group(ss, validate_table(f20.table(), "F20"));
  const auto back = parse_group(ss);
  CHECK(back.name() == "F20");
  CHECK(back.table() == f20.table());

  auto fails_at = [](const std::string& text) {
    std::istringstream in(text);
    try {
      parse_group(in, "t.txt");
    } catch (const CatalogError& e) {
      CHECK(e.file() == "t.txt");
      return e.line();
    }
    return std::size_t{0};
  };
  CHECK(fails_at("Z2\n2\n0 1\n") == 3);
  CHECK(fails_at("Z2\ntwo\n") == 2);
  CHECK(fails_at("Z2\n2\n0 1\n1 x\n") == 4);
  CHECK(fails_at("Z2\n2\n0 1\n1 0\n0 0\n") == 5);
  CHECK(fails_at("Bad\n2\n0 1\n1 1\n") > 0);
}

TEST_CASE("order-20 catalog") {
  const auto groups = load_catalog(std::filesystem::path(HAARFORGE_DATA_DIR) / "groups" / "order20");
  REQUIRE(groups.size() == 5);
  std::vector<std::vector<std::size_t>> profiles;
  std::size_t abelian = 0;
  for (const auto& g : groups) {
    CHECK(g.order() == 20);
    profiles.push_back(element_order_profile(g));
    abelian += is_abelian(g);
  }
  CHECK(abelian == 2);
  std::sort(profiles.begin(), profiles.end());
  CHECK(std::adjacent_find(profiles.begin(), profiles.end()) == profiles.end());
}
