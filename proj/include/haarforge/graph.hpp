#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace haarforge {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Immutable simple undirected graph. Neighbor lists are kept sorted.
class Graph {
public:
  Graph() = default;
  /// Builds from an edge list; rejects loops, parallel edges and
  /// out-of-range endpoints.
  Graph(std::size_t n, const std::vector<Edge>& edges, std::vector<std::string> labels = {});

  std::size_t order() const { return adj_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  std::size_t degree(Vertex v) const { return adj_[v].size(); }
  bool adjacent(Vertex u, Vertex v) const;
  /// Edges with first < second, in lexicographic order.
  std::vector<Edge> edges() const;
  /// Common valency if the graph is regular.
  std::optional<std::size_t> regular_valency() const;
  std::vector<std::size_t> degree_sequence() const;

  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(Vertex v) const;

  /// Graph whose vertex image[v] plays the role of v.
  Graph relabeled(std::span<const Vertex> image) const;

  bool operator==(const Graph& other) const { return adj_ == other.adj_; }

private:
  std::vector<std::vector<Vertex>> adj_;
  std::size_t edge_count_ = 0;
  std::vector<std::string> labels_;
};

/// "index: n1 n2 ..." one line per vertex.
void write_adjacency_list(std::ostream& out, const Graph& g);
Graph read_adjacency_list(std::istream& in);

}  // namespace haarforge
