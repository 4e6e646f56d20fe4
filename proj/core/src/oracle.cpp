#include <algorithm>
#include <map>

#include "avoid/search.hpp"

namespace avoid {

namespace {

// Walks two circuits from the start together, one edge each per step, over
// every pair of edge choices. Only the avoiding rule cuts the walk short.
class PairWalker {
 public:
  PairWalker(const Graph& g, Vertex start, std::size_t limit)
      : g_(g), m_(g.size()), start_(start), limit_(limit) {
    unused_a_.assign(g.rows().begin(), g.rows().end());
    unused_b_ = unused_a_;
    seq_a_.assign(static_cast<std::size_t>(m_) + 1, start);
    seq_b_ = seq_a_;
  }

  void run() { walk(0, start_, start_); }

  const std::vector<std::pair<std::vector<Vertex>, std::vector<Vertex>>>& pairs() const {
    return pairs_;
  }

 private:
  void walk(int s, Vertex a, Vertex b) {
    if (s == m_) {
      if (a == start_ && b == start_) {
        if (pairs_.size() >= limit_) throw GraphError("oracle: too many avoiding pairs");
        pairs_.emplace_back(seq_a_, seq_b_);
      }
      return;
    }
    const VertexMask next_a = unused_a_[a];
    for (Vertex x = 0; x < g_.order(); ++x) {
      if (!((next_a >> x) & 1U)) continue;
      unused_a_[a] &= ~bit(x);
      unused_a_[x] &= ~bit(a);
      seq_a_[s + 1] = x;
      const VertexMask next_b = unused_b_[b];
      for (Vertex y = 0; y < g_.order(); ++y) {
        if (!((next_b >> y) & 1U)) continue;
        // Unordered pairs: the first steps differ in any avoiding pair.
        if (s == 0 && y <= x) continue;
        if (s + 1 < m_ && (x == y || g_.adjacent(x, y))) continue;
        unused_b_[b] &= ~bit(y);
        unused_b_[y] &= ~bit(b);
        seq_b_[s + 1] = y;
        walk(s + 1, x, y);
        unused_b_[b] |= bit(y);
        unused_b_[y] |= bit(b);
      }
      unused_a_[a] |= bit(x);
      unused_a_[x] |= bit(a);
    }
  }

  const Graph& g_;
  int m_;
  Vertex start_;
  std::size_t limit_;
  std::vector<VertexMask> unused_a_;
  std::vector<VertexMask> unused_b_;
  std::vector<Vertex> seq_a_;
  std::vector<Vertex> seq_b_;
  std::vector<std::pair<std::vector<Vertex>, std::vector<Vertex>>> pairs_;
};

// Plain maximum clique by branching on candidates in index order.
class MaxClique {
 public:
  explicit MaxClique(std::vector<std::vector<int>> adj) : adj_(std::move(adj)) {}

  int solve() {
    std::vector<int> all(adj_.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
    grow(0, all);
    return best_;
  }

 private:
  void grow(int size, const std::vector<int>& candidates) {
    best_ = std::max(best_, size);
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (size + static_cast<int>(candidates.size() - i) <= best_) return;
      const int v = candidates[i];
      std::vector<int> next;
      for (std::size_t j = i + 1; j < candidates.size(); ++j) {
        if (std::binary_search(adj_[v].begin(), adj_[v].end(), candidates[j])) {
          next.push_back(candidates[j]);
        }
      }
      grow(size + 1, next);
    }
  }

  std::vector<std::vector<int>> adj_;  // sorted neighbour lists
  int best_ = 0;
};

}  // namespace

int oracle_av_vertex(const Graph& g, Vertex v, std::size_t pair_limit) {
  if (!is_eulerian(g)) throw GraphError("oracle_av_vertex: graph is not Eulerian");
  if (v < 0 || v >= g.order()) throw GraphError("oracle_av_vertex: vertex out of range");
  PairWalker walker(g, v, pair_limit);
  walker.run();
  if (walker.pairs().empty()) return 1;

  std::map<std::vector<Vertex>, int> ids;
  auto id_of = [&](const std::vector<Vertex>& seq) {
    return ids.try_emplace(seq, static_cast<int>(ids.size())).first->second;
  };
  std::vector<std::pair<int, int>> edges;
  for (const auto& [a, b] : walker.pairs()) edges.emplace_back(id_of(a), id_of(b));
  std::vector<std::vector<int>> adj(ids.size());
  for (const auto& [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());
  return std::max(2, MaxClique(std::move(adj)).solve());
}

}  // namespace avoid
