#include "avoid/graph.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace avoid {

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(std::max(n, 0)), 0) {
  if (n < 0 || n > kMaxVertices) {
    throw GraphError("graph order " + std::to_string(n) + " outside 0.." +
                     std::to_string(kMaxVertices));
  }
}

Graph Graph::build(int n, std::span<const std::pair<Vertex, Vertex>> edges) {
  Graph g(n);
  for (const auto& [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || v >= n_) {
    throw GraphError("vertex " + std::to_string(v) + " out of range for order " +
                     std::to_string(n_));
  }
}

VertexMask Graph::all_vertices() const {
  return n_ == kMaxVertices ? ~VertexMask{0} : (VertexMask{1} << n_) - 1;
}

int Graph::min_degree() const {
  int best = n_ == 0 ? 0 : kMaxVertices;
  for (Vertex v = 0; v < n_; ++v) best = std::min(best, degree(v));
  return best;
}

int Graph::max_degree() const {
  int best = 0;
  for (Vertex v = 0; v < n_; ++v) best = std::max(best, degree(v));
  return best;
}

EdgeList Graph::edges() const {
  EdgeList out;
  out.reserve(static_cast<std::size_t>(m_));
  for (Vertex u = 0; u < n_; ++u) {
    for_each_bit(adj_[u] & ~((bit(u) << 1) - 1), [&](Vertex v) { out.emplace_back(u, v); });
  }
  return out;
}

void Graph::add_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
  if (adjacent(u, v)) {
    throw GraphError("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
  }
  adj_[u] |= bit(v);
  adj_[v] |= bit(u);
  ++m_;
}

void Graph::remove_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (!adjacent(u, v)) {
    throw GraphError("no edge " + std::to_string(u) + "-" + std::to_string(v));
  }
  adj_[u] &= ~bit(v);
  adj_[v] &= ~bit(u);
  --m_;
}

VertexMask reachable_within(const Graph& g, Vertex from, VertexMask mask) {
  VertexMask seen = bit(from);
  VertexMask frontier = seen;
  while (frontier != 0) {
    VertexMask next = 0;
    for_each_bit(frontier, [&](Vertex v) { next |= g.neighbours(v); });
    next &= mask & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  return reachable_within(g, 0, g.all_vertices()) == g.all_vertices();
}

bool is_eulerian(const Graph& g) {
  if (g.order() == 0 || g.size() == 0) return false;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) % 2 != 0) return false;
  }
  return is_connected(g);
}

std::optional<Bipartition> bipartition(const Graph& g) {
  std::vector<int> colour(static_cast<std::size_t>(g.order()), -1);
  for (Vertex root = 0; root < g.order(); ++root) {
    if (colour[root] >= 0) continue;
    colour[root] = 0;
    std::vector<Vertex> queue{root};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex v = queue[head];
      bool clash = false;
      for_each_bit(g.neighbours(v), [&](Vertex w) {
        if (colour[w] < 0) {
          colour[w] = 1 - colour[v];
          queue.push_back(w);
        } else if (colour[w] == colour[v]) {
          clash = true;
        }
      });
      if (clash) return std::nullopt;
    }
  }
  Bipartition parts;
  for (Vertex v = 0; v < g.order(); ++v) {
    (colour[v] == 0 ? parts.first : parts.second).push_back(v);
  }
  return parts;
}

std::vector<int> distances_from(const Graph& g, Vertex u) {
  std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
  dist[u] = 0;
  VertexMask seen = bit(u);
  VertexMask frontier = seen;
  for (int d = 1; frontier != 0; ++d) {
    VertexMask next = 0;
    for_each_bit(frontier, [&](Vertex v) { next |= g.neighbours(v); });
    next &= ~seen;
    for_each_bit(next, [&](Vertex w) { dist[w] = d; });
    seen |= next;
    frontier = next;
  }
  return dist;
}

std::optional<int> distance(const Graph& g, Vertex u, Vertex v) {
  if (u < 0 || u >= g.order() || v < 0 || v >= g.order()) {
    throw GraphError("distance query outside vertex range");
  }
  const int d = distances_from(g, u)[v];
  if (d < 0) return std::nullopt;
  return d;
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  if (static_cast<int>(perm.size()) != g.order()) {
    throw GraphError("relabel: permutation size mismatch");
  }
  Graph out(g.order());
  for (const auto& [u, v] : g.edges()) out.add_edge(perm[u], perm[v]);
  return out;
}

Graph complement(const Graph& g) {
  Graph out(g.order());
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (!g.adjacent(u, v)) out.add_edge(u, v);
    }
  }
  return out;
}

bool is_cut_vertex(const Graph& g, Vertex v) {
  const VertexMask rest = g.all_vertices() & ~bit(v);
  if (rest == 0) return false;
  const Vertex root = std::countr_zero(rest);
  return reachable_within(g, root, rest) != rest;
}

namespace {

int max_independent(const Graph& g, VertexMask candidates) {
  if (candidates == 0) return 0;
  const Vertex v = std::countr_zero(candidates);
  const VertexMask rest = candidates & ~bit(v);
  // Either v is in the set (drop its neighbours) or it is not.
  const int with = 1 + max_independent(g, rest & ~g.neighbours(v));
  if (with > popcount(rest)) return with;
  return std::max(with, max_independent(g, rest));
}

}  // namespace

int independence_number(const Graph& g, VertexMask mask) {
  return max_independent(g, mask & g.all_vertices());
}

Graph parse_edge_list(const std::string& text) {
  std::vector<long> values;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::replace(line.begin(), line.end(), ';', ' ');
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream tokens(line);
    std::string token;
    while (tokens >> token) {
      long value = 0;
      const auto* first = token.data();
      const auto* last = token.data() + token.size();
      const auto [ptr, ec] = std::from_chars(first, last, value);
      if (ec != std::errc{} || ptr != last) {
        throw GraphError("edge list: bad token '" + token + "'");
      }
      values.push_back(value);
    }
  }
  if (values.empty()) throw GraphError("edge list: missing vertex count");
  if ((values.size() - 1) % 2 != 0) throw GraphError("edge list: odd number of endpoints");
  Graph g(static_cast<int>(values[0]));
  for (std::size_t i = 1; i < values.size(); i += 2) {
    g.add_edge(static_cast<Vertex>(values[i]), static_cast<Vertex>(values[i + 1]));
  }
  return g;
}

std::string format_edge_list(const Graph& g) {
  std::string out = std::to_string(g.order()) + ";\n";
  for (const auto& [u, v] : g.edges()) {
    out += std::to_string(u) + " " + std::to_string(v) + "\n";
  }
  return out;
}

}  // namespace avoid
