#include "haarforge/report.hpp"

namespace haarforge {

namespace {

nlohmann::json cycles(const std::vector<Permutation>& gens) {
  auto out = nlohmann::json::array();
  for (const auto& g : gens) out.push_back(g.to_cycle_string());
  return out;
}

}  // namespace

nlohmann::json big_to_json(const BigInt& value) {
  if (value >= 0 && value <= std::numeric_limits<std::uint64_t>::max())
    return static_cast<std::uint64_t>(value);
  return value.str();
}

nlohmann::json to_json(const ClassificationReport& r) {
  nlohmann::json j;
  j["order"] = r.order;
  j["edges"] = r.edge_count;
  j["valency"] = r.regular_valency ? nlohmann::json(*r.regular_valency) : nlohmann::json(nullptr);
  j["bipartite"] = r.bipartite;
  j["girth"] = r.girth ? nlohmann::json(*r.girth) : nlohmann::json(nullptr);
  j["aut_order"] = big_to_json(r.aut_order);
  j["vertex_transitive"] = r.vertex_transitive;
  j["arc_transitive"] = r.arc_transitive;
  j["cayley"] = r.cayley;
  j["haar"] = r.haar;
  j["orbit_count"] = r.orbit_count;
  j["witnesses"] = {{"cayley", cycles(r.cayley_witness)}, {"haar", cycles(r.haar_witness)}};
  return j;
}

nlohmann::json to_json(const HaarWitnessReport& r) {
  return {
      {"n", r.n},
      {"r", r.r},
      {"m", r.m},
      {"preserves_edges", r.preserves_edges},
      {"preserves_parts", r.preserves_parts},
      {"conjugation_sign", r.conjugation_sign},
      {"group_order", big_to_json(r.group_order)},
      {"regular_on_part0", r.regular_on_part0},
      {"regular_on_part1", r.regular_on_part1},
      {"matches_semidirect", r.matches_semidirect},
      {"generators", cycles(r.generators)},
      {"passed", r.passed()},
  };
}

nlohmann::json to_json(const DnrCheck& c) {
  return {
      {"n", c.n},
      {"r", c.r},
      {"branch", to_string(c.predicted.branch)},
      {"predicted", {{"vertex_transitive", c.predicted.vertex_transitive},
                     {"cayley", c.predicted.cayley},
                     {"haar", c.predicted.haar}}},
      {"computed", {{"vertex_transitive", c.vertex_transitive},
                    {"cayley", c.cayley},
                    {"haar", c.haar},
                    {"arc_transitive", c.arc_transitive}}},
      {"orbit_count", c.orbit_count},
      {"aut_order", big_to_json(c.aut_order)},
      {"match", c.matches()},
  };
}

}  // namespace haarforge
