#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace avoid {

using Vertex = int;
using VertexMask = std::uint64_t;

inline constexpr int kMaxVertices = 64;

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr VertexMask bit(Vertex v) { return VertexMask{1} << v; }

inline int popcount(VertexMask m) { return std::popcount(m); }

/// Iterates the set bits of a mask in ascending order.
template <typename F>
inline void for_each_bit(VertexMask m, F&& f) {
  while (m != 0) {
    f(static_cast<Vertex>(std::countr_zero(m)));
    m &= m - 1;
  }
}

using EdgeList = std::vector<std::pair<Vertex, Vertex>>;

/// Undirected simple graph on vertices 0..n-1, one adjacency word per vertex.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  /// Throws GraphError on self-loops, duplicate or out-of-range edges, n > 64.
  static Graph build(int n, std::span<const std::pair<Vertex, Vertex>> edges);

  int order() const { return n_; }
  int size() const { return m_; }

  bool adjacent(Vertex u, Vertex v) const { return (adj_[u] >> v) & 1U; }
  VertexMask neighbours(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return popcount(adj_[v]); }
  VertexMask all_vertices() const;

  int min_degree() const;
  int max_degree() const;

  /// Edges as (u, v) with u < v, sorted.
  EdgeList edges() const;

  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);

  std::span<const VertexMask> rows() const { return adj_; }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(Vertex v) const;

  int n_ = 0;
  int m_ = 0;
  std::vector<VertexMask> adj_;
};

struct Bipartition {
  std::vector<Vertex> first;
  std::vector<Vertex> second;
};

bool is_connected(const Graph& g);

/// Connected and every degree even.
bool is_eulerian(const Graph& g);

std::optional<Bipartition> bipartition(const Graph& g);

/// BFS hop count; nullopt when v is unreachable from u.
std::optional<int> distance(const Graph& g, Vertex u, Vertex v);

/// All BFS distances from u; -1 marks unreachable vertices.
std::vector<int> distances_from(const Graph& g, Vertex u);

/// Graph with vertex v renamed to perm[v].
Graph relabel(const Graph& g, std::span<const Vertex> perm);

Graph complement(const Graph& g);

/// True when removing v leaves the remaining vertices disconnected.
bool is_cut_vertex(const Graph& g, Vertex v);

/// Vertices within `mask` reachable from `from` through vertices of `mask`.
VertexMask reachable_within(const Graph& g, Vertex from, VertexMask mask);

/// Independence number of the subgraph induced on `mask` (exact, exponential).
int independence_number(const Graph& g, VertexMask mask);

/// "n; u v" text: first line n, then one edge per line; '#' starts a comment.
Graph parse_edge_list(const std::string& text);
std::string format_edge_list(const Graph& g);

}  // namespace avoid
