#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "haarforge/constructions.hpp"
#include "haarforge/graph.hpp"
#include "haarforge/groups.hpp"
#include "haarforge/permutation.hpp"

namespace fixtures {

using namespace haarforge;

inline Graph cycle(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex i = 0; i < n; ++i) e.emplace_back(i, static_cast<Vertex>((i + 1) % n));
  return Graph(n, e);
}

inline Graph path(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

inline Graph complete(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph(n, e);
}

inline Graph random_graph(std::size_t n, double p, std::mt19937& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> e;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j)
      if (coin(rng)) e.emplace_back(i, j);
  return Graph(n, e);
}

inline Permutation random_permutation(std::size_t n, std::mt19937& rng) {
  std::vector<Point> images(n);
  std::iota(images.begin(), images.end(), 0);
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation(images);
}

inline Graph shuffled(const Graph& g, std::mt19937& rng) {
  const auto p = random_permutation(g.order(), rng);
  return g.relabeled(std::vector<Vertex>(p.images().begin(), p.images().end()));
}

inline FiniteGroup klein() { return direct_product(cyclic(2), cyclic(2)); }

/// Small groups used as Cayley and Haar bases.
inline std::vector<FiniteGroup> small_groups() {
  return {cyclic(3),
          cyclic(5),
          cyclic(6),
          klein(),
          generalized_dihedral(cyclic(3)),
          generalized_dihedral(cyclic(4)),
          direct_product(cyclic(4), cyclic(2)),
          semidirect_cyclic(5, 4, 2)};
}

inline std::vector<Element> inverse_closed_subset(const FiniteGroup& g, std::vector<Element> seed) {
  std::vector<Element> s;
  for (Element x : seed) {
    if (x == g.identity()) continue;
    s.push_back(x);
    s.push_back(g.inv(x));
  }
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

}  // namespace fixtures
