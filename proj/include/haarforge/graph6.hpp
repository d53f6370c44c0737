#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "haarforge/graph.hpp"

namespace haarforge {

class Graph6Error : public std::runtime_error {
public:
  enum class Kind {
    malformed_header,   // size field missing, truncated or non-canonical
    byte_out_of_range,  // a byte outside 63..126
    bit_count_mismatch, // payload length does not match the vertex count
    too_large,          // vertex count beyond the format's limit
  };

  Graph6Error(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

private:
  Kind kind_;
};

inline constexpr std::uint64_t kGraph6MaxOrder = 68719476735ULL;  // 2^36 - 1

/// graph6: size header N(n), then the upper-triangle adjacency bits in
/// column order (x(0,1), x(0,2), x(1,2), x(0,3), ...), six bits per byte,
/// most significant first, zero padded, each byte offset by 63.
std::string encode_graph6(const Graph& g);
/// Accepts an optional ">>graph6<<" prefix and trailing newline.
Graph decode_graph6(std::string_view text);

}  // namespace haarforge
