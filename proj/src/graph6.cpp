#include "haarforge/graph6.hpp"

#include <vector>

namespace haarforge {

namespace {

void put_size(std::string& out, std::uint64_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  }
}

}  // namespace

std::string encode_graph6(const Graph& g) {
  const std::uint64_t n = g.order();
  if (n > kGraph6MaxOrder)
    throw Graph6Error(Graph6Error::Kind::too_large, "graph6: too many vertices");
  std::string out;
  put_size(out, n);
  unsigned chunk = 0;
  int filled = 0;
  for (std::uint64_t j = 1; j < n; ++j)
    for (std::uint64_t i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j)) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + chunk));
        chunk = 0;
        filled = 0;
      }
    }
  if (filled > 0) out.push_back(static_cast<char>(63 + (chunk << (6 - filled))));
  return out;
}

Graph decode_graph6(std::string_view text) {
  using K = Graph6Error::Kind;
  constexpr std::string_view prefix = ">>graph6<<";
  if (text.substr(0, prefix.size()) == prefix) text.remove_prefix(prefix.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw Graph6Error(K::malformed_header, "graph6: empty input");
  for (char c : text)
    if (static_cast<unsigned char>(c) < 63 || static_cast<unsigned char>(c) > 126)
      throw Graph6Error(K::byte_out_of_range,
                        "graph6: byte " + std::to_string(static_cast<unsigned char>(c)) +
                            " outside 63..126");

  auto value = [&](std::size_t i) { return static_cast<std::uint64_t>(text[i] - 63); };
  std::uint64_t n = 0;
  std::size_t pos = 0;
  if (text[0] != 126) {
    n = value(0);
    pos = 1;
  } else if (text.size() >= 2 && text[1] != 126) {
    if (text.size() < 4) throw Graph6Error(K::malformed_header, "graph6: truncated size field");
    for (std::size_t i = 1; i < 4; ++i) n = (n << 6) | value(i);
    if (n <= 62) throw Graph6Error(K::malformed_header, "graph6: non-canonical size field");
    pos = 4;
  } else {
    if (text.size() < 8) throw Graph6Error(K::malformed_header, "graph6: truncated size field");
    for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | value(i);
    if (n <= 258047) throw Graph6Error(K::malformed_header, "graph6: non-canonical size field");
    pos = 8;
  }

  const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::uint64_t expected = (bits + 5) / 6;
  if (text.size() - pos != expected)
    throw Graph6Error(K::bit_count_mismatch,
                      "graph6: expected " + std::to_string(expected) + " payload bytes for " +
                          std::to_string(n) + " vertices, got " + std::to_string(text.size() - pos));

  std::vector<Edge> edges;
  std::uint64_t k = 0;
  for (std::uint64_t j = 1; j < n; ++j)
    for (std::uint64_t i = 0; i < j; ++i, ++k) {
      const std::uint64_t byte = value(pos + k / 6);
      if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  if (bits % 6 != 0 && (value(text.size() - 1) & ((1u << (6 - bits % 6)) - 1)) != 0)
    throw Graph6Error(K::bit_count_mismatch, "graph6: nonzero padding bits");
  return Graph(static_cast<std::size_t>(n), edges);
}

}  // namespace haarforge
