#include "avoid/bounds.hpp"

#include <algorithm>

namespace avoid {

namespace {

int non_neighbour_degree_sum(const Graph& g, Vertex v) {
  int s = 0;
  for_each_bit(g.all_vertices() & ~g.neighbours(v) & ~bit(v), [&](Vertex w) { s += g.degree(w); });
  return s;
}

// Floor division that rounds toward negative infinity.
int floor_div(int a, int b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }

}  // namespace

int start_ceiling(const Graph& g, Vertex u) {
  int best = independence_number(g, g.neighbours(u));
  for (Vertex w = 0; w < g.order(); ++w) {
    const int s = non_neighbour_degree_sum(g, w);
    const int d = g.degree(w);
    int bound = best;
    if (w == u) {
      // Interior arrivals at u: d/2 - 1; elsewhere outside N[u]: s/2.
      if (d > 2) bound = s / (d - 2) + 1;
    } else if (g.adjacent(u, w)) {
      bound = s / d + 1;
    } else {
      // u itself is outside N[w] and its final arrival is not interior.
      bound = floor_div(s - 2, d) + 1;
    }
    best = std::min(best, bound);
  }
  return std::max(best, 1);
}

BoundReport bounds(const Graph& g) {
  if (!is_eulerian(g)) throw GraphError("bounds: graph is not Eulerian");
  BoundReport report;
  report.n = g.order();
  report.min_degree = g.min_degree();
  report.max_degree = g.max_degree();
  report.min_alpha = report.n;
  report.excess_bound = report.n;
  for (Vertex v = 0; v < g.order(); ++v) {
    VertexBound b;
    b.v = v;
    b.degree = g.degree(v);
    b.alpha = independence_number(g, g.neighbours(v));
    b.s = non_neighbour_degree_sum(g, v);
    b.excess_bound = floor_div(b.s - 2, b.degree) + 1;
    b.start_ceiling = start_ceiling(g, v);
    report.min_alpha = std::min(report.min_alpha, b.alpha);
    report.excess_bound = std::min(report.excess_bound, b.excess_bound);
    report.per_vertex.push_back(b);
  }
  if (report.max_degree == report.n - 1) report.excess_bound = 1;
  report.ceiling = std::min({report.min_degree, report.min_alpha, report.excess_bound});
  report.ceiling = std::max(report.ceiling, 1);
  return report;
}

}  // namespace avoid
