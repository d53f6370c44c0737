#include "haarforge/constructions.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <set>
#include <stdexcept>

namespace haarforge {

namespace {

long long mod(long long a, long long m) {
  long long r = a % m;
  return r < 0 ? r + m : r;
}

std::vector<Edge> dedup(std::set<Edge>&& edges) { return {edges.begin(), edges.end()}; }

Edge undirected(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

void require_group_subset(const FiniteGroup& g, const ElementSubset& s, const char* what) {
  if (!s.empty() && s.members().back() >= g.order())
    throw std::invalid_argument(std::string(what) + ": subset element outside the group");
}

void require_connection_set(const FiniteGroup& g, const ElementSubset& s, const char* what) {
  require_group_subset(g, s, what);
  if (s.contains(g.identity()))
    throw std::invalid_argument(std::string(what) + ": connection set contains the identity");
  if (!s.inverse_closed(g))
    throw std::invalid_argument(std::string(what) + ": connection set is not inverse-closed");
}

}  // namespace

Graph cayley_graph(const FiniteGroup& g, const ElementSubset& s) {
  require_connection_set(g, s, "cayley_graph");
  std::set<Edge> edges;
  for (Element x = 0; x < g.order(); ++x)
    for (Element t : s) edges.insert(undirected(x, g.mul(t, x)));
  return Graph(g.order(), dedup(std::move(edges)));
}

Graph haar_graph(const FiniteGroup& g, const ElementSubset& s) {
  require_group_subset(g, s, "haar_graph");
  if (s.empty()) throw std::invalid_argument("haar_graph: empty connection set");
  const auto n = static_cast<Vertex>(g.order());
  std::vector<Edge> edges;
  edges.reserve(g.order() * s.size());
  for (Element x = 0; x < n; ++x)
    for (Element t : s) edges.emplace_back(x, n + g.mul(t, x));
  return Graph(2 * n, edges);
}

Graph bicayley_graph(const FiniteGroup& g, const ElementSubset& left, const ElementSubset& right,
                     const ElementSubset& s) {
  require_connection_set(g, left, "bicayley_graph (L)");
  require_connection_set(g, right, "bicayley_graph (R)");
  require_group_subset(g, s, "bicayley_graph (S)");
  const auto n = static_cast<Vertex>(g.order());
  std::set<Edge> edges;
  for (Element x = 0; x < n; ++x) {
    for (Element l : left) edges.insert(undirected(x, g.mul(l, x)));
    for (Element r : right) edges.insert(undirected(n + x, n + g.mul(r, x)));
    for (Element t : s) edges.insert(undirected(x, n + g.mul(t, x)));
  }
  return Graph(2 * n, dedup(std::move(edges)));
}

std::vector<Edge> petersen_inner_edges(long long n, long long r) {
  std::vector<Edge> inner;
  for (long long i = 0; i < n; ++i)
    inner.push_back(undirected(static_cast<Vertex>(n + i), static_cast<Vertex>(n + mod(i + r, n))));
  std::sort(inner.begin(), inner.end());
  return inner;
}

Graph generalized_petersen(long long n, long long r) {
  if (n < 3) throw std::invalid_argument("generalized_petersen: n must be at least 3");
  if (r <= 0 || r >= n) throw std::invalid_argument("generalized_petersen: need 0 < r < n");
  if (2 * r == n)
    throw std::invalid_argument("generalized_petersen: r = n/2 gives parallel inner edges");
  std::vector<Edge> edges;
  std::vector<std::string> labels(2 * n);
  for (long long i = 0; i < n; ++i) {
    const auto u = static_cast<Vertex>(i), u_next = static_cast<Vertex>(mod(i + 1, n));
    edges.push_back(undirected(u, u_next));
    edges.emplace_back(u, static_cast<Vertex>(n + i));
    labels[i] = "u" + std::to_string(i);
    labels[n + i] = "v" + std::to_string(i);
  }
  for (auto e : petersen_inner_edges(n, r)) edges.push_back(e);
  return Graph(2 * n, edges, std::move(labels));
}

Vertex DgpLabeling::at(Kind kind, long long i) const {
  return static_cast<Vertex>(static_cast<long long>(kind) * n + mod(i, n));
}

std::string DgpLabeling::name(Vertex x) const {
  static constexpr char letters[] = {'u', 'v', 'w', 'z'};
  return letters[x / n] + std::to_string(index(x));
}

DgpEdgeClass DoubleGeneralizedPetersen::edge_class(Vertex a, Vertex b) const {
  using K = DgpLabeling::Kind;
  const K ka = labeling.kind(a), kb = labeling.kind(b);
  if (ka == kb) return DgpEdgeClass::outer;
  if ((ka == K::v && kb == K::w) || (ka == K::w && kb == K::v)) return DgpEdgeClass::inner;
  return DgpEdgeClass::spoke;
}

DoubleGeneralizedPetersen double_generalized_petersen(long long n, long long r) {
  if (n < 3) throw std::invalid_argument("double_generalized_petersen: n must be at least 3");
  if (r <= 0 || r >= n) throw std::invalid_argument("double_generalized_petersen: need 0 < r < n");
  if (2 * r == n)
    throw std::invalid_argument("double_generalized_petersen: r = n/2 gives parallel inner edges");
  const DgpLabeling lab{n};
  std::vector<Edge> edges;
  edges.reserve(6 * n);
  for (long long i = 0; i < n; ++i) {
    edges.push_back(undirected(lab.u(i), lab.u(i + 1)));
    edges.push_back(undirected(lab.z(i), lab.z(i + 1)));
    edges.push_back(undirected(lab.u(i), lab.v(i)));
    edges.push_back(undirected(lab.w(i), lab.z(i)));
    edges.push_back(undirected(lab.v(i), lab.w(i + r)));
    edges.push_back(undirected(lab.v(i), lab.w(i - r)));
  }
  std::vector<std::string> labels(4 * n);
  for (Vertex x = 0; x < 4 * n; ++x) labels[x] = lab.name(x);
  return {Graph(4 * n, edges, std::move(labels)), lab};
}

Graph cyclic_cover_sigma0(long long n, long long a, long long k, long long b) {
  if (n < 3) throw std::invalid_argument("cyclic_cover_sigma0: n must be at least 3");
  a = mod(a, n);
  k = mod(k, n);
  b = mod(b, n);
  if (a == 0 || b == 0) throw std::invalid_argument("cyclic_cover_sigma0: zero rim voltage gives loops");
  if (2 * a == n || 2 * b == n)
    throw std::invalid_argument("cyclic_cover_sigma0: rim voltage n/2 gives parallel edges");
  if (k == 0) throw std::invalid_argument("cyclic_cover_sigma0: k = 0 gives parallel inner edges");
  const DgpLabeling lab{n};
  std::vector<Edge> edges;
  edges.reserve(6 * n);
  for (long long i = 0; i < n; ++i) {
    edges.push_back(undirected(lab.u(i), lab.u(i + a)));
    edges.push_back(undirected(lab.z(i), lab.z(i + b)));
    edges.push_back(undirected(lab.u(i), lab.v(i)));
    edges.push_back(undirected(lab.w(i), lab.z(i)));
    edges.push_back(undirected(lab.v(i), lab.w(i)));
    edges.push_back(undirected(lab.v(i), lab.w(i + k)));
  }
  return Graph(4 * n, edges);
}

Graph kronecker_cover(const Graph& g) {
  const auto n = static_cast<Vertex>(g.order());
  std::vector<Edge> edges;
  for (auto [a, b] : g.edges()) {
    edges.emplace_back(a, n + b);
    edges.emplace_back(b, n + a);
  }
  return Graph(2 * n, edges);
}

Graph voltage_double_cover(const Graph& g, const std::vector<Edge>& voltage) {
  std::vector<Edge> crossing;
  for (auto [a, b] : voltage) {
    if (a >= g.order() || b >= g.order() || !g.adjacent(a, b))
      throw std::invalid_argument("voltage_double_cover: {" + std::to_string(a) + ", " +
                                  std::to_string(b) + "} is not an edge");
    crossing.push_back(undirected(a, b));
  }
  std::sort(crossing.begin(), crossing.end());
  const auto n = static_cast<Vertex>(g.order());
  std::vector<Edge> edges;
  for (auto e : g.edges()) {
    const auto [a, b] = e;
    if (std::binary_search(crossing.begin(), crossing.end(), e)) {
      edges.emplace_back(a, n + b);
      edges.emplace_back(b, n + a);
    } else {
      edges.emplace_back(a, b);
      edges.emplace_back(n + a, n + b);
    }
  }
  return Graph(2 * n, edges);
}

std::optional<Bipartition> bipartition(const Graph& g) {
  constexpr unsigned char unset = 2;
  std::vector<unsigned char> side(g.order(), unset);
  std::vector<Vertex> queue;
  for (Vertex root = 0; root < g.order(); ++root) {
    if (side[root] != unset) continue;
    side[root] = 0;
    queue.assign(1, root);
    for (std::size_t i = 0; i < queue.size(); ++i) {
      const Vertex x = queue[i];
      for (Vertex y : g.neighbors(x)) {
        if (side[y] == unset) {
          side[y] = 1 - side[x];
          queue.push_back(y);
        } else if (side[y] == side[x]) {
          return std::nullopt;
        }
      }
    }
  }
  Bipartition bp;
  bp.side = std::move(side);
  for (Vertex v = 0; v < g.order(); ++v) (bp.side[v] ? bp.part1 : bp.part0).push_back(v);
  return bp;
}

std::optional<std::size_t> girth(const Graph& g) {
  constexpr std::size_t inf = std::numeric_limits<std::size_t>::max();
  std::size_t best = inf;
  std::vector<std::size_t> dist(g.order());
  std::vector<Vertex> parent(g.order());
  std::vector<Vertex> queue;
  for (Vertex root = 0; root < g.order(); ++root) {
    std::fill(dist.begin(), dist.end(), inf);
    dist[root] = 0;
    parent[root] = root;
    queue.assign(1, root);
    for (std::size_t i = 0; i < queue.size(); ++i) {
      const Vertex x = queue[i];
      // Cycles found from here on are at least 2*dist[x]+1 long.
      if (2 * dist[x] + 1 >= best) break;
      for (Vertex y : g.neighbors(x)) {
        if (dist[y] == inf) {
          dist[y] = dist[x] + 1;
          parent[y] = x;
          queue.push_back(y);
        } else if (parent[x] != y) {
          best = std::min(best, dist[x] + dist[y] + 1);
        }
      }
    }
  }
  if (best == inf) return std::nullopt;
  return best;
}

std::vector<std::size_t> connected_components(const Graph& g) {
  constexpr std::size_t unset = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> comp(g.order(), unset);
  std::size_t count = 0;
  std::vector<Vertex> stack;
  for (Vertex root = 0; root < g.order(); ++root) {
    if (comp[root] != unset) continue;
    comp[root] = count;
    stack.assign(1, root);
    while (!stack.empty()) {
      const Vertex x = stack.back();
      stack.pop_back();
      for (Vertex y : g.neighbors(x))
        if (comp[y] == unset) {
          comp[y] = count;
          stack.push_back(y);
        }
    }
    ++count;
  }
  return comp;
}

bool is_connected(const Graph& g) {
  const auto comp = connected_components(g);
  return std::all_of(comp.begin(), comp.end(), [](std::size_t c) { return c == 0; });
}

}  // namespace haarforge
