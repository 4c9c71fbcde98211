#pragma once

// graph6 encoding: N(n) followed by the upper triangle of the adjacency
// matrix in column order (x(0,1), x(0,2), x(1,2), x(0,3), ...), packed six
// bits per byte, big-endian, each byte offset by 63.

#include <string>
#include <string_view>

#include "chromax/graph.hpp"

namespace chromax {

inline constexpr std::string_view kGraph6Header = ">>graph6<<";

inline std::string write_graph6(const SimpleGraph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else {
    out.push_back(static_cast<char>(126));
    out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
    out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
    out.push_back(static_cast<char>(63 + (n & 63)));
  }
  int acc = 0, nbits = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = nbits = 0;
      }
    }
  }
  if (nbits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
  return out;
}

/// Parse one graph6 record. A leading ">>graph6<<" header and a trailing
/// newline (LF or CRLF) are accepted. Errors carry the byte offset of the
/// offending character.
inline SimpleGraph parse_graph6(std::string_view text) {
  std::size_t pos = 0;
  if (text.substr(0, kGraph6Header.size()) == kGraph6Header) pos = kGraph6Header.size();
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);

  auto byte_at = [&](std::size_t i) -> int {
    if (i >= text.size()) throw Error(Errc::malformed_graph6, "record truncated", i);
    const int c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126) throw Error(Errc::malformed_graph6, "byte outside 63..126", i);
    return c - 63;
  };

  long n = byte_at(pos);
  if (n == 63) {
    if (pos + 1 < text.size() && static_cast<unsigned char>(text[pos + 1]) == 126)
      throw Error(Errc::too_large, "graph6 order beyond 258047 is not supported", pos + 1);
    n = (static_cast<long>(byte_at(pos + 1)) << 12) | (byte_at(pos + 2) << 6) | byte_at(pos + 3);
    if (n < 63) throw Error(Errc::malformed_graph6, "non-canonical long order field", pos);
    pos += 4;
  } else {
    pos += 1;
  }
  if (n > kMaxVertices) throw Error(Errc::too_large, "graph order " + std::to_string(n) + " exceeds 64", pos);

  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
  const std::size_t need = (bits + 5) / 6;
  if (text.size() - pos != need)
    throw Error(Errc::malformed_graph6,
                "expected " + std::to_string(need) + " adjacency bytes, found " + std::to_string(text.size() - pos),
                text.size() < pos + need ? text.size() : pos + need);

  std::vector<VertexSet> adj(static_cast<std::size_t>(n), 0);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int b = byte_at(pos + k / 6);
      if ((b >> (5 - static_cast<int>(k % 6))) & 1) {
        adj[static_cast<std::size_t>(i)] |= bit(j);
        adj[static_cast<std::size_t>(j)] |= bit(i);
      }
    }
  }
  if (bits % 6 != 0) {
    const int last = byte_at(pos + need - 1);
    if (last & ((1 << (6 - bits % 6)) - 1))
      throw Error(Errc::malformed_graph6, "nonzero padding bits", pos + need - 1);
  }
  for (std::size_t i = pos; i < text.size(); ++i) byte_at(i);
  return SimpleGraph::from_adjacency(std::move(adj));
}

}  // namespace chromax
