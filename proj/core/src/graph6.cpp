#include "avoid/graph6.hpp"

namespace avoid {

namespace {

constexpr char kOffset = 63;
constexpr std::string_view kHeader = ">>graph6<<";

bool valid_char(char c) { return c >= 63 && c <= 126; }

}  // namespace

std::string graph6_encode(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kOffset));
  } else {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 0x3F) + kOffset));
    }
  }
  int acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kOffset));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kOffset));
  return out;
}

Graph graph6_decode(std::string_view text) {
  if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw GraphError("graph6: empty input");
  for (char c : text) {
    if (!valid_char(c)) throw GraphError("graph6: character outside 63..126");
  }
  std::size_t pos = 0;
  int n = 0;
  if (text[0] != '~') {
    n = text[0] - kOffset;
    pos = 1;
  } else {
    if (text.size() < 4 || text[1] == '~') throw GraphError("graph6: malformed length field");
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | (text[i] - kOffset);
    if (n <= 62) throw GraphError("graph6: non-minimal length field");
    pos = 4;
  }
  if (n > kMaxVertices) throw GraphError("graph6: order " + std::to_string(n) + " exceeds 64");
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() - pos != bytes) throw GraphError("graph6: payload length does not match order");

  Graph g(n);
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const int byte = text[pos + k / 6] - kOffset;
      if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  if (bits % 6 != 0) {
    const int last = text.back() - kOffset;
    const int pad = static_cast<int>(6 - bits % 6);
    if ((last & ((1 << pad) - 1)) != 0) throw GraphError("graph6: nonzero padding bits");
  }
  return g;
}

}  // namespace avoid
