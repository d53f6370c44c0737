#pragma once

#include <optional>
#include <string>
#include <vector>

#include "haarforge/graph.hpp"
#include "haarforge/groups.hpp"

namespace haarforge {

// Cayley-type graphs over a multiplication-table group. Vertex g of the
// Cayley graph is element g; in Haar and bi-Cayley graphs (g, 0) is vertex g
// and (g, 1) is vertex |G| + g.

/// Edges {g, s*g}. Requires identity not in S and S = S^-1.
Graph cayley_graph(const FiniteGroup& g, const ElementSubset& s);
/// Edges {(g,0), (s*g,1)}. S must be nonempty; the identity is allowed.
Graph haar_graph(const FiniteGroup& g, const ElementSubset& s);
/// Haar edges from S plus {(g,0),(l*g,0)} for l in L and {(g,1),(r*g,1)}
/// for r in R.
Graph bicayley_graph(const FiniteGroup& g, const ElementSubset& left, const ElementSubset& right,
                     const ElementSubset& s);

/// Outer vertices u_i = i, inner vertices v_i = n + i.
Graph generalized_petersen(long long n, long long r);
/// The inner edges {v_i, v_{i+r}} of generalized_petersen(n, r).
std::vector<Edge> petersen_inner_edges(long long n, long long r);

/// Index layout of the double generalized Petersen graph: u-block [0,n),
/// v-block [n,2n), w-block [2n,3n), z-block [3n,4n). Indices are taken
/// mod n.
struct DgpLabeling {
  enum class Kind { u = 0, v = 1, w = 2, z = 3 };

  long long n = 0;

  Vertex at(Kind kind, long long i) const;
  Vertex u(long long i) const { return at(Kind::u, i); }
  Vertex v(long long i) const { return at(Kind::v, i); }
  Vertex w(long long i) const { return at(Kind::w, i); }
  Vertex z(long long i) const { return at(Kind::z, i); }
  Kind kind(Vertex x) const { return static_cast<Kind>(x / n); }
  long long index(Vertex x) const { return static_cast<long long>(x) % n; }
  std::string name(Vertex x) const;
};

enum class DgpEdgeClass { outer, spoke, inner };

struct DoubleGeneralizedPetersen {
  Graph graph;
  DgpLabeling labeling;

  DgpEdgeClass edge_class(Vertex a, Vertex b) const;
};

/// D(n, r): outer edges u_i u_{i+1}, z_i z_{i+1}; spokes u_i v_i, w_i z_i;
/// inner edges v_i w_{i+r}, v_i w_{i-r}.
DoubleGeneralizedPetersen double_generalized_petersen(long long n, long long r);

/// Z_n-cover of the four-vertex voltage graph with fibers u, v, w, z:
/// u_i ~ u_{i+a}, z_i ~ z_{i+b}, u_i ~ v_i, w_i ~ z_i, v_i ~ w_i and
/// v_i ~ w_{i+k}. Vertex layout as in DgpLabeling.
Graph cyclic_cover_sigma0(long long n, long long a, long long k, long long b);

/// Tensor product with K2: (v, e) is vertex v + e*n.
Graph kronecker_cover(const Graph& g);
/// Z2-cover where exactly the edges in `voltage` cross between the sheets.
/// (v, e) is vertex v + e*n.
Graph voltage_double_cover(const Graph& g, const std::vector<Edge>& voltage);

struct Bipartition {
  std::vector<Vertex> part0;
  std::vector<Vertex> part1;
  std::vector<unsigned char> side;  // side[v] in {0, 1}
};

/// Two-colouring with the lowest vertex of each component on side 0, or
/// nullopt if the graph has an odd cycle.
std::optional<Bipartition> bipartition(const Graph& g);
/// Shortest cycle length; nullopt for forests.
std::optional<std::size_t> girth(const Graph& g);
bool is_connected(const Graph& g);
/// Component id per vertex, numbered in order of lowest vertex.
std::vector<std::size_t> connected_components(const Graph& g);

}  // namespace haarforge
