#pragma once

#include <string>
#include <string_view>

#include "avoid/graph.hpp"

namespace avoid {

// graph6: N(n) followed by the upper triangle of the adjacency matrix read
// column by column (x(0,1), x(0,2), x(1,2), x(0,3), ...), packed big-endian
// into 6-bit groups, each group offset by 63. The optional ">>graph6<<"
// header is accepted on input and never written.

std::string graph6_encode(const Graph& g);

/// Throws GraphError on a malformed length, bad characters, wrong payload
/// size or nonzero padding bits.
Graph graph6_decode(std::string_view text);

}  // namespace avoid
