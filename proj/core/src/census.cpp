#include "avoid/census.hpp"

#include <atomic>
#include <chrono>
#include <fstream>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "avoid/canonical.hpp"
#include "avoid/families.hpp"
#include "avoid/graph6.hpp"

namespace avoid {

namespace {

class Augmenter {
 public:
  Augmenter(int n, CensusClass family, const std::function<void(const Graph&)>& emit)
      : n_(n), family_(family), emit_(emit) {}

  void run() { extend(Graph(1)); }

 private:
  void extend(const Graph& g) {
    const int i = g.order();
    if (i == n_) {
      emit_(canonical(g).relabelled(g));
      return;
    }
    std::set<std::string> seen;
    for_each_subset(g, [&](VertexMask s) {
      Graph child(i + 1);
      for (const auto& [a, b] : g.edges()) child.add_edge(a, b);
      for_each_bit(s, [&](Vertex v) { child.add_edge(v, i); });
      if (!feasible(child)) return;
      const CanonicalForm form = canonical(child);
      if (form.orbit[i] != form.orbit[deletion_vertex(child, form)]) return;
      if (!seen.insert(form.bytes).second) return;
      extend(child);
    });
  }

  // Non-cut vertex with the largest canonical label.
  static Vertex deletion_vertex(const Graph& g, const CanonicalForm& form) {
    Vertex best = -1;
    for (Vertex v = 0; v < g.order(); ++v) {
      if (is_cut_vertex(g, v)) continue;
      if (best < 0 || form.labeling[v] > form.labeling[best]) best = v;
    }
    return best;
  }

  template <typename F>
  void for_each_subset(const Graph& g, F&& f) const {
    const int i = g.order();
    const bool last = i + 1 == n_;
    if (family_ == CensusClass::eulerian) {
      if (last) {
        VertexMask odd = 0;
        for (Vertex v = 0; v < i; ++v) {
          if (g.degree(v) % 2 != 0) odd |= bit(v);
        }
        if (odd != 0) f(odd);
        return;
      }
      for (VertexMask s = 1; s < (VertexMask{1} << i); ++s) f(s);
      return;
    }
    VertexMask open = 0;
    for (Vertex v = 0; v < i; ++v) {
      if (g.degree(v) < 4) open |= bit(v);
    }
    if (last) {
      if (popcount(open) == 4) f(open);
      return;
    }
    subsets_up_to(open, 4, 0, f);
  }

  template <typename F>
  static void subsets_up_to(VertexMask pool, int limit, VertexMask chosen, F&& f) {
    if (chosen != 0) f(chosen);
    if (limit == 0) return;
    // Extend only with vertices above the current maximum to avoid repeats.
    const VertexMask above =
        chosen == 0 ? pool : pool & ~((bit(63 - std::countl_zero(chosen)) << 1) - 1);
    for_each_bit(above, [&](Vertex v) { subsets_up_to(pool, limit - 1, chosen | bit(v), f); });
  }

  // Whether the graph can still be completed; every ancestor of a target
  // graph is an induced subgraph of it, so these tests never reject one.
  bool feasible(const Graph& g) const {
    const int i = g.order();
    const int r = n_ - i;
    if (family_ == CensusClass::eulerian) {
      if (r > 0) return true;
      return is_eulerian(g);
    }
    int deficiency = 0;
    for (Vertex v = 0; v < i; ++v) {
      const int d = 4 - g.degree(v);
      if (d < 0 || d > r) return false;
      deficiency += d;
    }
    if (r == 0) return deficiency == 0;
    return deficiency % 2 == 0 && deficiency <= 4 * r && deficiency >= 4 * r - r * (r - 1);
  }

  int n_;
  CensusClass family_;
  const std::function<void(const Graph&)>& emit_;
};

}  // namespace

void enumerate_eulerian(int n, const std::function<void(const Graph&)>& emit) {
  if (n < 3 || n > 10) throw GraphError("enumerate_eulerian: order must be in 3..10");
  Augmenter(n, CensusClass::eulerian, emit).run();
}

void enumerate_4regular(int n, const std::function<void(const Graph&)>& emit) {
  if (n < 5 || n > 13) throw GraphError("enumerate_4regular: order must be in 5..13");
  Augmenter(n, CensusClass::four_regular, emit).run();
}

std::vector<Graph> eulerian_graphs(int n) {
  std::vector<Graph> out;
  enumerate_eulerian(n, [&](const Graph& g) { out.push_back(g); });
  return out;
}

std::vector<Graph> four_regular_graphs(int n) {
  std::vector<Graph> out;
  enumerate_4regular(n, [&](const Graph& g) { out.push_back(g); });
  return out;
}

namespace {

std::map<std::string, std::string> read_checkpoint(const std::string& path) {
  std::map<std::string, std::string> done;
  std::ifstream in(path);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream fields(line);
    std::string g6;
    std::string value;
    if (fields >> g6 >> value) done[g6] = value;
  }
  return done;
}

}  // namespace

CensusRow census(int n, CensusClass family, const CensusOptions& options) {
  const auto t0 = std::chrono::steady_clock::now();
  const std::vector<Graph> graphs =
      family == CensusClass::eulerian ? eulerian_graphs(n) : four_regular_graphs(n);
  const auto done =
      options.checkpoint.empty() ? std::map<std::string, std::string>{} : read_checkpoint(options.checkpoint);
  std::ofstream log;
  if (!options.checkpoint.empty()) log.open(options.checkpoint, std::ios::app);
  std::mutex log_mutex;

  std::vector<int> index(graphs.size(), 0);  // 0 marks unresolved
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < graphs.size(); i = next++) {
      const std::string g6 = graph6_encode(graphs[i]);
      if (const auto it = done.find(g6); it != done.end()) {
        index[i] = it->second == "unresolved" ? 0 : std::stoi(it->second);
        continue;
      }
      const IndexResult r = graph_index(graphs[i], options.search);
      index[i] = r.resolved ? r.av : 0;
      if (log.is_open()) {
        const std::lock_guard lock(log_mutex);
        log << g6 << ' ' << (r.resolved ? std::to_string(r.av) : std::string("unresolved")) << '\n'
            << std::flush;
      }
    }
  };
  const int threads = options.search.threads > 0
                          ? options.search.threads
                          : static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
  if (threads <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(work);
  }

  CensusRow row;
  row.order = n;
  row.total = static_cast<int>(graphs.size());
  row.histogram.assign(static_cast<std::size_t>(options.columns), 0);
  for (int av : index) {
    if (av == 0) {
      ++row.unresolved;
      continue;
    }
    if (av > static_cast<int>(row.histogram.size())) row.histogram.resize(static_cast<std::size_t>(av), 0);
    ++row.histogram[av - 1];
  }
  row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return row;
}

std::string census_csv_header(int columns) {
  std::string out = "order,total";
  for (int i = 1; i <= columns; ++i) out += "," + std::to_string(i);
  return out + ",unresolved";
}

std::string census_csv_line(const CensusRow& row) {
  std::string out = std::to_string(row.order) + "," + std::to_string(row.total);
  for (int count : row.histogram) out += "," + std::to_string(count);
  return out + "," + std::to_string(row.unresolved);
}

std::vector<SaturationVerdict> saturated_scan(std::span<const int> generators, int n_min, int n_max,
                                              const SearchOptions& options) {
  std::vector<SaturationVerdict> out;
  for (int n = n_min; n <= n_max; ++n) {
    bool fits = true;
    for (int g : generators) fits = fits && g >= 1 && 2 * g <= n;
    if (!fits) continue;
    const Graph g = circulant(n, generators);
    if (!is_eulerian(g)) continue;
    SaturationVerdict verdict;
    verdict.n = n;
    verdict.degree = g.degree(0);
    // Circulants are vertex-transitive, so vertex 0 decides.
    const ExistsResult r = exists_k(g, 0, verdict.degree, options);
    verdict.nodes = r.nodes;
    verdict.saturated = r.status == SearchStatus::found;
    verdict.resolved = r.status != SearchStatus::unresolved;
    out.push_back(verdict);
  }
  return out;
}

}  // namespace avoid
