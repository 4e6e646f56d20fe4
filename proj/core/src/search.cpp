#include "avoid/search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <numeric>
#include <random>
#include <thread>

namespace avoid {

const char* to_string(SearchStatus status) {
  switch (status) {
    case SearchStatus::found:
      return "found";
    case SearchStatus::none:
      return "none";
    case SearchStatus::unresolved:
      return "unresolved";
    case SearchStatus::rejected:
      return "rejected";
  }
  return "unknown";
}

Rational make_rational(long long num, long long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const long long d = std::gcd(num, den);
  return {num / d, den / d};
}

namespace {

struct BudgetExhausted {};

// Lockstep search: at step s every circuit moves once, circuit 0 first.
// Positions after each step must be pairwise distinct and non-adjacent until
// the last step, where every circuit returns to the start.
class Lockstep {
 public:
  Lockstep(const Graph& g, Vertex start, int k, const SearchOptions& options,
           const std::vector<Vertex>& orbit_min, std::uint64_t budget, std::uint64_t seed)
      : g_(g), n_(g.order()), m_(g.size()), k_(k), u_(start), options_(options),
        orbit_min_(orbit_min), tail_(std::clamp(options.endgame_depth, 0, 4)), budget_(budget),
        seed_(seed), rng_(seed) {
    closed_.resize(static_cast<std::size_t>(n_));
    for (Vertex v = 0; v < n_; ++v) closed_[v] = g.neighbours(v) | bit(v);
    unused_.assign(static_cast<std::size_t>(k_) * n_, 0);
    for (int j = 0; j < k_; ++j) {
      for (Vertex v = 0; v < n_; ++v) row(j, v) = g.neighbours(v);
    }
    pos_.assign(static_cast<std::size_t>(k_), u_);
    trail_.assign(static_cast<std::size_t>(k_) * (m_ + 1), u_);
    arrivals_.assign(static_cast<std::size_t>(k_) * n_, 0);
    outside_.assign(static_cast<std::size_t>(k_) * n_, 0);
    load_.assign(static_cast<std::size_t>(n_), 0);
    in_.assign(static_cast<std::size_t>(k_), 0);
    total_.assign(static_cast<std::size_t>(k_), 0);
    out_.assign(static_cast<std::size_t>(k_), 0);
    row_left_.assign(static_cast<std::size_t>(n_), 0);
    col_left_.assign(static_cast<std::size_t>(n_), 0);
    flow_.assign(static_cast<std::size_t>(n_) * n_, 0);
    row_from_.assign(static_cast<std::size_t>(n_), 0);
    col_from_.assign(static_cast<std::size_t>(n_), 0);
    for (const auto& [a, b] : g.edges()) {
      // Without a common non-neighbour the single-vertex test already covers it.
      const VertexMask all = (n_ == 64 ? ~VertexMask{0} : (VertexMask{1} << n_) - 1);
      if ((all & ~(closed_[a] | closed_[b])) == 0) continue;
      pair_sets_.push_back({bit(a) | bit(b), closed_[a] & closed_[b]});
    }
    if (bipartition(g)) {
      const std::vector<int> dist = distances_from(g, u_);
      for (Vertex v = 0; v < n_; ++v) side_.push_back(dist[v] % 2);
    } else {
      for (const auto& [a, b] : g.edges()) {
        cliques_.push_back(bit(a) | bit(b));
        for_each_bit(g.neighbours(a) & g.neighbours(b) & ~((bit(b) << 1) - 1),
                     [&](Vertex c) { cliques_.push_back(bit(a) | bit(b) | bit(c)); });
      }
    }
  }

  // Returns true and fills circuits() when a solution exists.
  bool run() {
    if (options_.counting_prune && k_ > 1) {
      if (!counts_feasible(0) || !pairings_feasible()) return false;
    }
    return step(0);
  }

  std::uint64_t nodes() const { return nodes_; }

  std::vector<Circuit> circuits() const {
    std::vector<Circuit> out;
    for (int j = 0; j < k_; ++j) {
      const auto first = trail_.begin() + static_cast<std::ptrdiff_t>(j) * (m_ + 1);
      out.push_back(Circuit{std::vector<Vertex>(first, first + m_ + 1)});
    }
    return out;
  }

 private:
  VertexMask& row(int j, Vertex v) { return unused_[static_cast<std::size_t>(j) * n_ + v]; }
  VertexMask row(int j, Vertex v) const { return unused_[static_cast<std::size_t>(j) * n_ + v]; }
  Vertex& at(int j, int s) { return trail_[static_cast<std::size_t>(j) * (m_ + 1) + s]; }

  bool step(int s) {
    if (s == m_ - 1) {
      for (int j = 0; j < k_; ++j) {
        if (row(j, pos_[j]) != bit(u_)) return false;
        at(j, m_) = u_;
      }
      return true;
    }
    if (s > 0) {
      if (options_.connectivity_interval > 0 && s % options_.connectivity_interval == 0) {
        for (int j = 0; j < k_; ++j) {
          if (!edges_connected(j)) return false;
        }
      }
      if (options_.counting_prune && !counts_feasible(s)) return false;
      if (k_ > 1 && tail_ > 0 && m_ - 1 - s > tail_ + 1) {
        std::array<VertexMask, 4> blocked{};
        if (!tails_possible(0, blocked)) return false;
      }
    }
    return move(s, 0, 0);
  }

  bool move(int s, int j, VertexMask forbidden) {
    if (j == k_) return step(s + 1);
    const Vertex p = pos_[j];
    VertexMask candidates = row(j, p) & ~forbidden;
    if (s == 0) {
      if (j == 0) {
        VertexMask reps = 0;
        for_each_bit(candidates, [&](Vertex w) {
          if (orbit_min_[w] == w) reps |= bit(w);
        });
        candidates = reps;
      } else {
        candidates &= ~((bit(pos_[j - 1]) << 1) - 1);
        candidates &= ~bad_last_;
      }
    }
    std::array<Vertex, kMaxVertices> order;
    int count = 0;
    for_each_bit(candidates, [&](Vertex w) { order[count++] = w; });
    if (seed_ != 0) {
      for (int a = count - 1; a > 0; --a) std::swap(order[a], order[rng_() % (a + 1)]);
    }
    for (int c = 0; c < count; ++c) {
      const Vertex w = order[c];
      if (++nodes_ > budget_ && budget_ != 0) throw BudgetExhausted{};
      // Entering the start early must leave a way out again.
      if (w == u_ && popcount(row(j, u_)) < 3) continue;
      row(j, p) &= ~bit(w);
      row(j, w) &= ~bit(p);
      const VertexMask saved_bad = bad_last_;
      if (s == 0 && j == 0) bad_last_ = lower_orbits(w);
      bool ok = true;
      if (p == u_ || w == u_) {
        const VertexMask left = row(j, u_);
        ok = left == 0 || (left & ~bad_last_) != 0;
      }
      if (ok && s == 0 && j > 0 && j == k_ - 1) ok = last_moves_possible();
      if (ok) {
        pos_[j] = w;
        at(j, s + 1) = w;
        if (move(s, j + 1, forbidden | closed_[w])) return true;
        pos_[j] = p;
      }
      bad_last_ = saved_bad;
      row(j, p) |= bit(w);
      row(j, w) |= bit(p);
    }
    return false;
  }

  // Neighbours of the start whose orbit lies below that of w.
  VertexMask lower_orbits(Vertex w) const {
    if (!options_.symmetry) return 0;
    VertexMask bad = 0;
    for_each_bit(g_.neighbours(u_), [&](Vertex x) {
      if (orbit_min_[x] < orbit_min_[w]) bad |= bit(x);
    });
    return bad;
  }

  // Each circuit still needs one unused start edge from an allowed vertex.
  bool last_moves_possible() const {
    for (int j = 0; j < k_; ++j) {
      if ((row(j, u_) & ~bad_last_) == 0) return false;
    }
    return true;
  }

  bool edges_connected(int j) const {
    VertexMask touched = 0;
    for (Vertex v = 0; v < n_; ++v) {
      if (row(j, v) != 0) touched |= bit(v);
    }
    VertexMask seen = bit(pos_[j]);
    VertexMask frontier = seen;
    while (frontier != 0) {
      VertexMask next = 0;
      for_each_bit(frontier, [&](Vertex v) { next |= row(j, v); });
      next &= ~seen;
      seen |= next;
      frontier = next;
    }
    return (touched & ~seen) == 0;
  }

  // Each circuit ends with a walk of `tail_` unused edges into the start; at
  // every one of those steps the circuits must be distinct and non-adjacent.
  // Tries to choose such tails for circuits j.. given the vertices blocked at
  // each of the final steps by the earlier circuits.
  bool tails_possible(int j, std::array<VertexMask, 4>& blocked) {
    if (j == k_) return true;
    return extend_tail(j, 0, u_, blocked);
  }

  bool extend_tail(int j, int depth, Vertex from, std::array<VertexMask, 4>& blocked) {
    if (depth == tail_) return tails_possible(j + 1, blocked);
    VertexMask options = row(j, from) & ~blocked[depth];
    if (depth == 0) options &= ~bad_last_;
    while (options != 0) {
      const Vertex x = std::countr_zero(options);
      options &= options - 1;
      const VertexMask saved = blocked[depth];
      blocked[depth] |= closed_[x];
      row(j, from) &= ~bit(x);
      row(j, x) &= ~bit(from);
      const bool ok = extend_tail(j, depth + 1, x, blocked);
      row(j, from) |= bit(x);
      row(j, x) |= bit(from);
      blocked[depth] = saved;
      if (ok) return true;
    }
    return false;
  }

  // Future interior arrivals of circuit j at v, for the position after s steps.
  int arrivals(int j, Vertex v) const {
    const int d = popcount(row(j, v));
    if (v == u_) return pos_[j] == u_ ? d / 2 - 1 : (d - 1) / 2;
    return v == pos_[j] ? (d - 1) / 2 : d / 2;
  }

  // Two necessary conditions on the remaining interior arrivals:
  //  - while circuit j is at v, circuit i is outside N[v], so j's arrivals at
  //    v cannot exceed i's arrivals outside N[v];
  //  - the same for an edge ab: j at a or b puts i outside N[a] or N[b];
  //  - a clique holds at most one circuit per step, so its arrivals summed
  //    over all circuits cannot exceed the remaining steps (of the right
  //    parity when the graph is bipartite).
  bool counts_feasible(int s) {
    std::fill(load_.begin(), load_.end(), 0);
    for (int j = 0; j < k_; ++j) {
      int* a = &arrivals_[static_cast<std::size_t>(j) * n_];
      int total = 0;
      for (Vertex v = 0; v < n_; ++v) {
        a[v] = arrivals(j, v);
        total += a[v];
        load_[v] += a[v];
      }
      total_[j] = total;
      int* out = &outside_[static_cast<std::size_t>(j) * n_];
      for (Vertex v = 0; v < n_; ++v) {
        int inside = 0;
        for_each_bit(closed_[v], [&](Vertex w) { inside += a[w]; });
        out[v] = total - inside;
      }
    }
    for (Vertex v = 0; v < n_; ++v) {
      for (int j = 0; j < k_; ++j) {
        const int a = arrivals_[static_cast<std::size_t>(j) * n_ + v];
        if (a == 0) continue;
        for (int i = 0; i < k_; ++i) {
          if (i != j && a > outside_[static_cast<std::size_t>(i) * n_ + v]) return false;
        }
      }
    }
    const int remaining = m_ - 1 - s;
    if (!side_.empty()) {
      // Steps s+1 .. m-1 of each parity.
      const int odd = (m_ - 1 + 1) / 2 - (s + 1) / 2;
      const int even = remaining - odd;
      for (Vertex v = 0; v < n_; ++v) {
        if (load_[v] > (side_[v] ? odd : even)) return false;
      }
    } else {
      for (VertexMask clique : cliques_) {
        int load = 0;
        for_each_bit(clique, [&](Vertex v) { load += load_[v]; });
        if (load > remaining) return false;
      }
    }
    // The edge test rarely cuts on its own; every fourth step is enough.
    if (s % 4 != 1) return true;
    for (const auto& [edge, common] : pair_sets_) {
      for (int j = 0; j < k_; ++j) {
        const int* a = &arrivals_[static_cast<std::size_t>(j) * n_];
        in_[j] = 0;
        out_[j] = total_[j];
        for_each_bit(edge, [&](Vertex v) { in_[j] += a[v]; });
        for_each_bit(common, [&](Vertex v) { out_[j] -= a[v]; });
      }
      for (int j = 0; j < k_; ++j) {
        for (int i = 0; i < k_; ++i) {
          if (i != j && in_[j] > out_[i]) return false;
        }
      }
    }
    return true;
  }

  // For two circuits, the steps pair i's arrivals with j's arrivals along
  // non-adjacent distinct vertex pairs (a transportation problem). Checked
  // before the first move; repeating it inside the search costs more than
  // it cuts.
  bool pairings_feasible() {
    for (int i = 0; i < k_; ++i) {
      for (int j = i + 1; j < k_; ++j) {
        if (!pairing_feasible(&arrivals_[static_cast<std::size_t>(i) * n_],
                              &arrivals_[static_cast<std::size_t>(j) * n_]))
          return false;
      }
    }
    return true;
  }

  // Max flow from supplies a (rows) to demands b (columns) over non-adjacent
  // distinct pairs; uncapacitated middle edges, so only residual row and
  // column capacities and the flow on each pair are tracked.
  bool pairing_feasible(const int* a, const int* b) {
    int need = 0;
    for (Vertex v = 0; v < n_; ++v) {
      row_left_[v] = a[v];
      col_left_[v] = b[v];
      need += a[v];
    }
    std::fill(flow_.begin(), flow_.end(), 0);
    const VertexMask all = (n_ == 64 ? ~VertexMask{0} : (VertexMask{1} << n_) - 1);
    // Greedy start, then augmenting paths alternating row -> column (free)
    // and column -> row (along positive flow).
    for (Vertex v = 0; v < n_; ++v) {
      for_each_bit(all & ~closed_[v], [&](Vertex w) {
        const int f = std::min(row_left_[v], col_left_[w]);
        if (f > 0) {
          flow_[static_cast<std::size_t>(v) * n_ + w] += f;
          row_left_[v] -= f;
          col_left_[w] -= f;
          need -= f;
        }
      });
    }
    while (need > 0) {
      std::fill(col_from_.begin(), col_from_.end(), -1);
      std::fill(row_from_.begin(), row_from_.end(), -2);
      auto& queue = queue_;
      queue.clear();
      for (Vertex v = 0; v < n_; ++v) {
        if (row_left_[v] > 0) {
          row_from_[v] = -1;
          queue.push_back(v);
        }
      }
      Vertex end = -1;
      for (std::size_t q = 0; q < queue.size() && end < 0; ++q) {
        const Vertex v = queue[q];
        for_each_bit(all & ~closed_[v], [&](Vertex w) {
          if (end >= 0 || col_from_[w] >= 0) return;
          col_from_[w] = v;
          if (col_left_[w] > 0) {
            end = w;
            return;
          }
          for (Vertex x = 0; x < n_; ++x) {
            if (row_from_[x] == -2 && flow_[static_cast<std::size_t>(x) * n_ + w] > 0) {
              row_from_[x] = w;
              queue.push_back(x);
            }
          }
        });
      }
      if (end < 0) return false;
      // Bottleneck along the path.
      int f = col_left_[end];
      for (Vertex w = end;;) {
        const Vertex v = col_from_[w];
        if (row_from_[v] == -1) {
          f = std::min(f, row_left_[v]);
          break;
        }
        w = row_from_[v];
        f = std::min(f, flow_[static_cast<std::size_t>(v) * n_ + w]);
      }
      col_left_[end] -= f;
      for (Vertex w = end;;) {
        const Vertex v = col_from_[w];
        flow_[static_cast<std::size_t>(v) * n_ + w] += f;
        if (row_from_[v] == -1) {
          row_left_[v] -= f;
          break;
        }
        w = row_from_[v];
        flow_[static_cast<std::size_t>(v) * n_ + w] -= f;
      }
      need -= f;
    }
    return true;
  }

  const Graph& g_;
  int n_;
  int m_;
  int k_;
  Vertex u_;
  const SearchOptions& options_;
  std::vector<VertexMask> closed_;
  std::vector<VertexMask> unused_;
  std::vector<Vertex> pos_;
  std::vector<Vertex> trail_;
  const std::vector<Vertex>& orbit_min_;
  VertexMask bad_last_ = 0;
  std::vector<int> arrivals_;
  std::vector<int> outside_;
  std::vector<int> load_;
  std::vector<int> side_;  // parity class per vertex when bipartite
  std::vector<VertexMask> cliques_;
  std::vector<std::pair<VertexMask, VertexMask>> pair_sets_;
  std::vector<int> in_;
  std::vector<int> total_;
  std::vector<int> out_;  // edge, vertices not dominated by it
  std::vector<int> row_left_;
  std::vector<int> col_left_;
  std::vector<int> flow_;
  std::vector<int> row_from_;
  std::vector<int> col_from_;
  std::vector<Vertex> queue_;
  int tail_;
  std::uint64_t nodes_ = 0;
  std::uint64_t budget_;
  std::uint64_t seed_;
  std::mt19937_64 rng_;
};

void require_eulerian(const Graph& g, const char* where) {
  if (!is_eulerian(g)) throw GraphError(std::string(where) + ": graph is not Eulerian");
}

void require_vertex(const Graph& g, Vertex v, const char* where) {
  if (v < 0 || v >= g.order()) throw GraphError(std::string(where) + ": vertex out of range");
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int worker_count(const SearchOptions& options) {
  if (options.threads > 0) return options.threads;
  return std::max(1U, std::thread::hardware_concurrency());
}

// Runs task(i) for i in [0, count) on `workers` threads.
template <typename Task>
void parallel_for(int count, int workers, Task&& task) {
  if (workers <= 1 || count <= 1) {
    for (int i = 0; i < count; ++i) task(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::jthread> pool;
  for (int w = 0; w < std::min(workers, count); ++w) {
    pool.emplace_back([&] {
      for (int i = next++; i < count; i = next++) task(i);
    });
  }
}

// For each vertex, an automorphism taking its orbit representative to it.
std::vector<std::vector<Vertex>> orbit_transversal(const CanonicalForm& form) {
  const auto n = form.orbit.size();
  std::vector<std::vector<Vertex>> map(n);
  for (std::size_t v = 0; v < n; ++v) {
    if (form.orbit[v] != static_cast<Vertex>(v)) continue;
    std::vector<Vertex> identity(n);
    std::iota(identity.begin(), identity.end(), 0);
    map[v] = identity;
    std::vector<Vertex> queue{static_cast<Vertex>(v)};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex x = queue[head];
      for (const auto& gamma : form.generators) {
        const Vertex y = gamma[x];
        if (!map[y].empty()) continue;
        std::vector<Vertex> composed(n);
        for (std::size_t i = 0; i < n; ++i) composed[i] = gamma[map[x][i]];
        map[y] = std::move(composed);
        queue.push_back(y);
      }
    }
  }
  return map;
}

}  // namespace

ExistsResult exists_k(const Graph& g, Vertex start, int k, const SearchOptions& options) {
  require_eulerian(g, "exists_k");
  require_vertex(g, start, "exists_k");
  if (k < 1) throw std::invalid_argument("exists_k: k must be positive");
  ExistsResult result;
  if (k > start_ceiling(g, start)) {
    result.status = SearchStatus::rejected;
    return result;
  }
  if (k == 1) {
    result.status = SearchStatus::found;
    result.certificate = certify(g, start, {hierholzer(g, start)});
    return result;
  }
  // Restarts with a fresh successor order and a doubled node allowance; a
  // run that finishes within its allowance is exhaustive either way.
  // Orbits of the automorphisms fixing the start; the identity when
  // symmetry breaking is off.
  std::vector<Vertex> orbit_min(static_cast<std::size_t>(g.order()));
  std::iota(orbit_min.begin(), orbit_min.end(), 0);
  if (options.symmetry) {
    std::vector<int> colours(static_cast<std::size_t>(g.order()), 0);
    colours[start] = 1;
    orbit_min = canonical(g, colours).orbit;
  }
  std::vector<Circuit> circuits;
  for (std::uint64_t round = 0;; ++round) {
    std::uint64_t allowance = options.restart_nodes == 0
                                  ? 0
                                  : options.restart_nodes << std::min<std::uint64_t>(round, 40);
    if (options.node_budget != 0) {
      const std::uint64_t left = options.node_budget - result.nodes;
      allowance = allowance == 0 ? left : std::min(allowance, left);
    }
    Lockstep search(g, start, k, options, orbit_min, allowance, round);
    try {
      const bool found = search.run();
      result.nodes += search.nodes();
      if (!found) {
        result.status = SearchStatus::none;
        return result;
      }
      circuits = search.circuits();
      break;
    } catch (const BudgetExhausted&) {
      result.nodes += allowance;
      if (options.node_budget != 0 && result.nodes >= options.node_budget) {
        result.status = SearchStatus::unresolved;
        return result;
      }
    }
  }
  AvoidanceCertificate cert = certify(g, start, std::move(circuits));
  if (!cert.verified) {
    throw std::logic_error("exists_k: search produced an invalid certificate: " +
                           certificate_problem(g, cert).value_or("?"));
  }
  result.status = SearchStatus::found;
  result.certificate = std::move(cert);
  return result;
}

VertexResult av_vertex(const Graph& g, Vertex v, const SearchOptions& options) {
  require_eulerian(g, "av_vertex");
  require_vertex(g, v, "av_vertex");
  const auto t0 = std::chrono::steady_clock::now();
  VertexResult out;
  out.v = v;
  out.certificate = certify(g, v, {hierholzer(g, v)});
  const int ceiling = start_ceiling(g, v);
  if (options.descending) {
    for (int k = ceiling; k >= 2; --k) {
      ExistsResult r = exists_k(g, v, k, options);
      out.nodes += r.nodes;
      if (r.status == SearchStatus::found) {
        out.av = k;
        out.certificate = std::move(*r.certificate);
        break;
      }
      if (r.status == SearchStatus::unresolved) out.resolved = false;
    }
  } else {
    for (int k = 2; k <= ceiling; ++k) {
      ExistsResult r = exists_k(g, v, k, options);
      out.nodes += r.nodes;
      if (r.status == SearchStatus::found) {
        out.av = k;
        out.certificate = std::move(*r.certificate);
        continue;
      }
      if (r.status == SearchStatus::unresolved) out.resolved = false;
      break;
    }
  }
  out.seconds = seconds_since(t0);
  return out;
}

SearchReport av_graph(const Graph& g, const SearchOptions& options) {
  require_eulerian(g, "av_graph");
  const auto t0 = std::chrono::steady_clock::now();
  SearchReport report;
  report.bounds = bounds(g);
  const CanonicalForm form = canonical(g);
  const std::vector<Vertex> reps = orbit_representatives(form);
  std::vector<VertexResult> rep_results(reps.size());
  parallel_for(static_cast<int>(reps.size()), worker_count(options),
               [&](int i) { rep_results[i] = av_vertex(g, reps[i], options); });

  const auto transversal = orbit_transversal(form);
  report.per_vertex.resize(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) {
    const auto rep_index = std::lower_bound(reps.begin(), reps.end(), form.orbit[v]) - reps.begin();
    const VertexResult& source = rep_results[rep_index];
    VertexResult& target = report.per_vertex[v];
    target = source;
    target.v = v;
    if (v != source.v) {
      std::vector<Circuit> mapped;
      for (const Circuit& c : source.certificate.circuits) {
        Circuit image;
        for (Vertex x : c.seq) image.seq.push_back(transversal[v][x]);
        mapped.push_back(std::move(image));
      }
      target.certificate = certify(g, v, std::move(mapped));
      if (!target.certificate.verified) {
        throw std::logic_error("av_graph: orbit map produced an invalid certificate");
      }
      target.nodes = 0;
      target.seconds = 0.0;
    }
  }
  long long sum = 0;
  report.av = report.per_vertex.empty() ? 1 : report.per_vertex.front().av;
  for (const VertexResult& r : report.per_vertex) {
    sum += r.av;
    report.av = std::min(report.av, r.av);
    report.resolved = report.resolved && r.resolved;
  }
  for (const VertexResult& r : rep_results) report.nodes += r.nodes;
  report.mean = make_rational(sum, g.order());
  report.seconds = seconds_since(t0);
  return report;
}

Rational mean_av(const Graph& g, const SearchOptions& options) {
  return av_graph(g, options).mean;
}

IndexResult graph_index(const Graph& g, const SearchOptions& options) {
  require_eulerian(g, "graph_index");
  IndexResult out;
  const CanonicalForm form = canonical(g);
  std::vector<std::pair<int, Vertex>> starts;
  for (Vertex r : orbit_representatives(form)) starts.emplace_back(start_ceiling(g, r), r);
  std::sort(starts.begin(), starts.end());
  for (int k = 2;; ++k) {
    bool unresolved = false;
    for (const auto& [ceiling, r] : starts) {
      if (ceiling < k) return out;
      ExistsResult res = exists_k(g, r, k, options);
      out.nodes += res.nodes;
      if (res.status == SearchStatus::none) return out;
      if (res.status == SearchStatus::unresolved) unresolved = true;
    }
    if (unresolved) {
      out.resolved = false;
      return out;
    }
    out.av = k;
  }
}

}  // namespace avoid
