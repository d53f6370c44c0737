#include "haarforge/graph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace haarforge {

Graph::Graph(std::size_t n, const std::vector<Edge>& edges, std::vector<std::string> labels)
    : adj_(n), labels_(std::move(labels)) {
  if (!labels_.empty() && labels_.size() != n)
    throw std::invalid_argument("graph: label count does not match vertex count");
  for (auto [u, v] : edges) {
    if (u >= n || v >= n)
      throw std::invalid_argument("graph: edge {" + std::to_string(u) + ", " + std::to_string(v) +
                                  "} out of range");
    if (u == v) throw std::invalid_argument("graph: loop at vertex " + std::to_string(u));
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (Vertex v = 0; v < n; ++v) {
    auto& nb = adj_[v];
    std::sort(nb.begin(), nb.end());
    if (auto it = std::adjacent_find(nb.begin(), nb.end()); it != nb.end())
      throw std::invalid_argument("graph: parallel edge {" + std::to_string(v) + ", " +
                                  std::to_string(*it) + "}");
  }
  edge_count_ = edges.size();
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& nb = adj_[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u)
    for (Vertex v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

std::optional<std::size_t> Graph::regular_valency() const {
  if (adj_.empty()) return std::nullopt;
  const std::size_t d = adj_[0].size();
  for (const auto& nb : adj_)
    if (nb.size() != d) return std::nullopt;
  return d;
}

std::vector<std::size_t> Graph::degree_sequence() const {
  std::vector<std::size_t> d;
  d.reserve(order());
  for (const auto& nb : adj_) d.push_back(nb.size());
  std::sort(d.begin(), d.end());
  return d;
}

std::string Graph::label(Vertex v) const {
  return labels_.empty() ? std::to_string(v) : labels_[v];
}

Graph Graph::relabeled(std::span<const Vertex> image) const {
  if (image.size() != order()) throw std::invalid_argument("relabeled: size mismatch");
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (auto [u, v] : edges()) out.emplace_back(image[u], image[v]);
  return Graph(order(), out);
}

void write_adjacency_list(std::ostream& out, const Graph& g) {
  for (Vertex v = 0; v < g.order(); ++v) {
    out << v << ':';
    for (Vertex w : g.neighbors(v)) out << ' ' << w;
    out << '\n';
  }
}

Graph read_adjacency_list(std::istream& in) {
  std::vector<Edge> arcs;
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("adjacency list: missing ':'");
    const Vertex v = static_cast<Vertex>(std::stoul(line.substr(0, colon)));
    if (v != n) throw std::invalid_argument("adjacency list: vertices must be listed in order");
    ++n;
    std::istringstream ss(line.substr(colon + 1));
    Vertex w;
    while (ss >> w) arcs.emplace_back(v, w);
  }
  std::vector<Edge> edges;
  auto sorted = arcs;
  std::sort(sorted.begin(), sorted.end());
  for (auto [u, v] : arcs) {
    if (v >= n) throw std::invalid_argument("adjacency list: neighbor out of range");
    if (!std::binary_search(sorted.begin(), sorted.end(), Edge{v, u}))
      throw std::invalid_argument("adjacency list: asymmetric entry " + std::to_string(u) +
                                  " -> " + std::to_string(v));
    if (u < v) edges.emplace_back(u, v);
  }
  return Graph(n, edges);
}

}  // namespace haarforge
