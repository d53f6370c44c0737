#pragma once

#include <optional>
#include <span>
#include <vector>

#include "haarforge/graph.hpp"
#include "haarforge/perm_group.hpp"

namespace haarforge {

struct RegularSubgroupOptions {
  /// Require every non-identity element to be fixed-point-free on the whole
  /// domain, not only on the target point set.
  bool semiregular_everywhere = false;
  /// Semiregular subgroups (as generator lists) to try extending first. A
  /// seed that does not extend falls through to the full search.
  std::vector<std::vector<Permutation>> seeds;
};

/// Searches for a subgroup of `group` acting regularly on `points`, which
/// must be a union of orbits. Depth-first over choices of the element
/// mapping a base point to each uncovered point, closing the subgroup after
/// every choice and backtracking on a non-semiregular closure. Exhaustive,
/// so nullopt certifies that no regular subgroup exists. Returns generators.
std::optional<std::vector<Permutation>> find_regular_subgroup(
    const PermGroup& group, std::span<const Point> points, const RegularSubgroupOptions& options = {});

/// Subgroup preserving each side of the bipartition `side` (side[v] in
/// {0,1}). For a transitive group on a connected graph this is obtained from
/// Schreier generators of the index-2 subgroup; callers with a disconnected
/// graph should use a colour-restricted search instead.
PermGroup part_preserving_subgroup(const PermGroup& group, std::span<const unsigned char> side);

struct Witness {
  bool found = false;
  std::vector<Permutation> generators;
};

bool is_vertex_transitive(const Graph& g);
bool is_vertex_transitive(const PermGroup& aut);
/// Throws std::invalid_argument for an edgeless graph.
bool is_arc_transitive(const Graph& g);
bool is_arc_transitive(const Graph& g, const PermGroup& aut);

/// Cayley iff Aut(G) has a subgroup regular on the vertex set.
Witness is_cayley(const Graph& g);
Witness is_cayley(const Graph& g, const PermGroup& aut, const RegularSubgroupOptions& options = {});
/// Haar iff bipartite and the part-preserving automorphisms contain a
/// subgroup regular on each part.
Witness is_haar(const Graph& g);
Witness is_haar(const Graph& g, const PermGroup& aut, const RegularSubgroupOptions& options = {});

struct ClassificationReport {
  std::size_t order = 0;
  std::size_t edge_count = 0;
  std::optional<std::size_t> regular_valency;
  bool bipartite = false;
  std::optional<std::size_t> girth;  // nullopt means infinite
  BigInt aut_order = 1;
  bool vertex_transitive = false;
  bool arc_transitive = false;
  bool cayley = false;
  bool haar = false;
  std::size_t orbit_count = 0;
  std::vector<Permutation> aut_generators;
  std::vector<Permutation> cayley_witness;
  std::vector<Permutation> haar_witness;
};

ClassificationReport classify(const Graph& g);
/// Classification with a precomputed automorphism group. `cayley_hints` are
/// passed as seeds to the regular-subgroup search.
ClassificationReport classify(const Graph& g, const PermGroup& aut,
                              const RegularSubgroupOptions& cayley_hints = {});

}  // namespace haarforge
