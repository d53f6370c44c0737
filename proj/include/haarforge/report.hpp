#pragma once

#include "json.hpp"

#include "haarforge/classify.hpp"
#include "haarforge/dnr.hpp"

namespace haarforge {

/// Big orders become strings once they no longer fit in 64 bits.
nlohmann::json big_to_json(const BigInt& value);

/// Fields: order, edges, valency, bipartite, girth, aut_order,
/// vertex_transitive, arc_transitive, cayley, haar, orbit_count, witnesses.
/// valency and girth are null for irregular graphs and forests.
nlohmann::json to_json(const ClassificationReport& r);
nlohmann::json to_json(const HaarWitnessReport& r);
nlohmann::json to_json(const DnrCheck& c);

}  // namespace haarforge
