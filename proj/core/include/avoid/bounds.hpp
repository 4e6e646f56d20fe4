#pragma once

#include <vector>

#include "avoid/graph.hpp"

namespace avoid {

struct VertexBound {
  Vertex v = 0;
  int degree = 0;
  /// Independence number of the neighbourhood.
  int alpha = 0;
  /// Sum of the degrees of the vertices not adjacent to v, v excluded.
  int s = 0;
  /// floor((S(v) - 2) / deg v) + 1; only meaningful when Delta < n - 1.
  int excess_bound = 0;
  /// Upper bound on av(v) itself (see start_ceiling).
  int start_ceiling = 0;
};

struct BoundReport {
  int n = 0;
  int min_degree = 0;
  int max_degree = 0;
  int min_alpha = 0;
  /// min over v of excess_bound, or 1 when some vertex is adjacent to all others.
  int excess_bound = 0;
  /// min(delta, min alpha, excess bound): an upper bound on av(G).
  int ceiling = 0;
  std::vector<VertexBound> per_vertex;
};

/// Throws GraphError when g is not Eulerian.
BoundReport bounds(const Graph& g);

/// Upper bound on av(u) from a counting argument at every vertex: while one
/// circuit sits at w the other k-1 sit outside N[w], so
///   k - 1 <= (arrivals of one circuit outside N[w]) / (arrivals at w).
/// Also k <= alpha(N(u)). Never below 1.
int start_ceiling(const Graph& g, Vertex u);

}  // namespace avoid
