#pragma once

#include <array>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "avoid/graph.hpp"

namespace avoid {

enum class Family {
  cycle,
  complete,
  complete_bipartite,
  complete_multipartite,
  kstar,
  circulant,
  gamma,
  lambda,
  kn_minus_ham_cycle,
  kn_minus_triangles,
  complement,
};

/// A named family member. Text form, accepted by parse_family():
///   cycle(n)  complete(n)  kbip(r,s)  km(p1,p2,...)  kstar(m)
///   circulant(n;g1,g2,...)  gamma(a,b,c,d)  lambda(a,b,c)
///   kn_minus_ham(n)  kn_minus_triangles(n)  complement(<spec>)
///
/// Vertex labels:
///   - cycle, circulant: i ~ i+g (mod n).
///   - kbip, km: parts are consecutive label ranges in the given order.
///   - kstar(m): i ~ m+j for i != j, so i and m+i are the removed pairs.
///   - gamma: u = 0, v = 1, then the interior vertices of paths A, B, C, D
///     in order, each path listed from u towards v. A path with no interior
///     vertex is the edge uv.
///   - lambda: labels follow the Hamiltonian cycle; u = 0, v = a+1,
///     w = a+b+2, and the triangle uvw is added.
///   - kn_minus_ham(n): K_n without the edges i,i+1.
///   - kn_minus_triangles(n): K_n without the edges i,i+n/3.
struct FamilySpec {
  Family family = Family::cycle;
  std::vector<int> params;
  std::shared_ptr<const FamilySpec> inner;  // complement only

  std::string to_string() const;
};

/// Throws GraphError naming the offending text.
FamilySpec parse_family(std::string_view text);

/// Throws GraphError for parameters outside the family's range, e.g.
/// gamma(0,0,1,1) (two copies of the edge uv) or a circulant generator 0.
Graph generate(const FamilySpec& spec);

Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph complete_multipartite(std::span<const int> parts);
Graph complete_bipartite(int r, int s);
Graph kstar(int m);
Graph circulant(int n, std::span<const int> generators);
Graph gamma_graph(int a, int b, int c, int d);
Graph lambda_graph(int a, int b, int c);
Graph kn_minus_ham_cycle(int n);
Graph kn_minus_triangles(int n);

/// Vertex roles in gamma_graph(a, b, c, d).
struct GammaLayout {
  Vertex u = 0;
  Vertex v = 1;
  /// paths[p] lists the interior vertices of path p (A..D) from u to v.
  std::array<std::vector<Vertex>, 4> paths;
};
GammaLayout gamma_layout(int a, int b, int c, int d);

/// m - n.
int edge_excess(const Graph& g);

/// Connected Eulerian graphs of order n with m = n + 2, one per isomorphism
/// class: gamma graphs, two cycles joined by two paths, and three cycles
/// through one vertex.
std::vector<Graph> excess_two_graphs(int n);

/// Stored graphs of the figures, keyed e.g. "fig2_cube_complement".
Graph figure_graph(std::string_view key);
std::vector<std::string> figure_keys();

}  // namespace avoid
