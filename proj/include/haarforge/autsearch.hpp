#pragma once

#include <span>
#include <string>
#include <vector>

#include "haarforge/graph.hpp"
#include "haarforge/perm_group.hpp"

namespace haarforge {

/// Relabeling-invariant description of a graph: the graph6 string of the
/// canonically relabeled graph, plus the relabeling (vertex -> canonical
/// position) that produced it.
struct Certificate {
  std::string graph6;
  Permutation relabeling;

  bool operator==(const Certificate& other) const { return graph6 == other.graph6; }
};

struct SymmetryResult {
  std::vector<Permutation> generators;
  Certificate certificate;
  std::size_t leaves = 0;  // search tree leaves visited
};

/// Individualization-refinement search over equitable partitions. Returns
/// generators of the automorphism group and the canonical form. `colors`,
/// when nonempty, restricts to colour-preserving automorphisms (and the
/// certificate is then only canonical among graphs with the same colouring).
SymmetryResult search_symmetries(const Graph& g, std::span<const int> colors = {});

PermGroup automorphism_group(const Graph& g);
Certificate canonical_form(const Graph& g);
/// Invariant screen (order, size, degree sequence, girth, bipartiteness)
/// followed by certificate comparison.
bool is_isomorphic(const Graph& a, const Graph& b);

/// Every permutation of at most 10 vertices tested against the edge set.
/// The returned group is generated by a subset of the automorphisms found.
struct BruteForceResult {
  PermGroup group;
  std::size_t automorphism_count = 0;
};
BruteForceResult brute_force_automorphisms(const Graph& g);

inline constexpr std::size_t kBruteForceVertexCap = 10;

}  // namespace haarforge
