#include "avoid/constructions.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <sstream>

#include "avoid/families.hpp"

namespace avoid {

namespace {

using Starts = std::vector<std::pair<Vertex, std::vector<Circuit>>>;

Construction finish(std::string name, Graph g, const Starts& starts) {
  Construction out{std::move(name), std::move(g), {}};
  for (const auto& [start, circuits] : starts) {
    AvoidanceCertificate cert = certify(out.graph, start, circuits);
    if (!cert.verified) {
      throw VerificationError(out.name + ": certificate from " + std::to_string(start) +
                              " failed: " + certificate_problem(out.graph, cert).value_or("?"));
    }
    out.certificates.push_back(std::move(cert));
  }
  return out;
}

void require(bool ok, const std::string& message) {
  if (!ok) throw ConstructionError(message);
}

int mod(int a, int n) { return ((a % n) + n) % n; }

Circuit mapped(const Circuit& c, const std::function<Vertex(Vertex)>& f) {
  Circuit out;
  out.seq.reserve(c.seq.size());
  for (Vertex x : c.seq) out.seq.push_back(f(x));
  return out;
}

// The second circuit of a "parallel" pair: the first circuit moved by an
// automorphism, then returned to the common start at both ends and at
// `patch`, where the moved circuit passes through `start` and takes the
// moved start instead.
Circuit parallel_partner(const Circuit& first, const std::function<Vertex(Vertex)>& shift,
                         std::size_t patch) {
  Circuit second = mapped(first, shift);
  const Vertex start = first.start();
  const Vertex moved = second.start();
  require(patch > 0 && patch + 1 < second.seq.size() && second.seq[patch] == start,
          "parallel_partner: patch position does not hold the start vertex");
  second.seq.front() = start;
  second.seq.back() = start;
  second.seq[patch] = moved;
  return second;
}

Graph without(Graph g, std::initializer_list<std::pair<Vertex, Vertex>> edges) {
  for (const auto& [a, b] : edges) g.remove_edge(a, b);
  return g;
}

std::vector<Vertex> concat(std::initializer_list<std::vector<Vertex>> parts) {
  std::vector<Vertex> out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

}  // namespace

const AvoidanceCertificate& Construction::from(Vertex start) const {
  for (const auto& cert : certificates) {
    if (cert.start == start) return cert;
  }
  throw ConstructionError(name + ": no certificate from vertex " + std::to_string(start));
}

// ---------------------------------------------------------------------------
// Odd orders.

Construction construct_3mod6(int n) {
  require(n >= 9 && n % 6 == 3, "construct_3mod6: n must be 3 mod 6 and at least 9");
  const int t = n / 3;
  const Vertex x = 1;
  const Vertex y = 2;
  const Graph g = kn_minus_triangles(n);
  const Graph reduced = without(g, {{0, x}, {0, y}, {t, x}, {t, y}});
  const Circuit e = hierholzer(reduced, x);
  const auto split = std::find(e.seq.begin() + 1, e.seq.end(), y);
  const std::vector<Vertex> t1(e.seq.begin(), split + 1);
  std::vector<Vertex> t2(split, e.seq.end());
  std::reverse(t2.begin(), t2.end());

  Circuit c1{concat({{0}, t1, {t}, t2, {0}})};
  const Circuit c2 = parallel_partner(c1, [&](Vertex v) { return mod(v + 2 * t, n); }, 1 + t1.size());
  return finish("3mod6(" + std::to_string(n) + ")", g, {{0, {c1, std::move(c2)}}});
}

BlockScheme block_scheme(int n) {
  require(n >= 23 && n % 2 == 1, "block_scheme: n must be odd and at least 23");
  BlockScheme s;
  s.n = n;
  s.f = (n - 3) / 2;
  const int f = s.f;
  s.c = {f - 1, 1};
  for (int v = 4; v <= f - 2; ++v) s.c.push_back(v);
  s.c.insert(s.c.end(), {f, 2, 3});

  // Which of c_2..c_{f-3} are taken positive, by n mod 8: a list for values
  // up to 9, residues mod 4 above that, and possibly one further value.
  std::vector<int> small;
  std::vector<int> classes;
  int extra = 0;
  switch (n % 8) {
    case 1: small = {4, 5, 7}; classes = {1, 2}; break;
    case 3: small = {4, 7}; classes = {2, 3}; break;
    case 5: small = {5, 6, 7, 9}; classes = {1, 2}; extra = (n - 21) / 2; break;
    default: small = {1, 5, 6, 7}; classes = {2, 3}; extra = (n - 15) / 2; break;
  }
  auto positive = [&](int v) {
    if (v == extra) return true;
    if (v <= 9) return std::ranges::find(small, v) != small.end();
    return std::ranges::find(classes, v % 4) != classes.end();
  };
  s.b.push_back(-(f - 1));
  for (int i = 1; i < f - 3; ++i) s.b.push_back(positive(s.c[i]) ? s.c[i] : -s.c[i]);
  s.b.insert(s.b.end(), {-f, 2, 3});
  const int sum = std::accumulate(s.b.begin(), s.b.end(), 0);
  require(mod(sum, n) == 1, "block_scheme: block sum is " + std::to_string(mod(sum, n)) + " mod n, not 1");
  return s;
}

std::array<std::vector<std::vector<int>>, 2> odd_max_blocks(const BlockScheme& s) {
  const int f = s.f;
  std::array<std::vector<std::vector<int>>, 2> blocks;
  blocks[0].assign(static_cast<std::size_t>(s.n), s.b);
  // Block variants of the second circuit: first element, then the last three.
  auto variant = [&](int first, int third_last, int second_last, int last) {
    std::vector<int> row = s.b;
    row[0] = first;
    row[f - 3] = third_last;
    row[f - 2] = second_last;
    row[f - 1] = last;
    return row;
  };
  auto& c2 = blocks[1];
  c2.push_back(variant(2, -f, 2, 3));
  for (int p = 2; p <= f + 6; ++p) c2.push_back(s.b);
  for (int p = f + 7; p <= f + 8; ++p) c2.push_back(variant(-(f - 1), -(f - 1), 2, 2));
  for (int p = f + 9; p <= 2 * f; ++p) c2.push_back(variant(-(f - 1), -f, 3, 2));
  c2.push_back(variant(-(f - 1), -f, 3, 3));
  c2.push_back(variant(-f, -f, 3, 3));
  c2.push_back(variant(-f, -f, 3, -(f - 1)));
  return blocks;
}

namespace {

Circuit walk_blocks(const std::vector<std::vector<int>>& rows, int n) {
  Circuit c{{0}};
  for (const auto& row : rows) {
    for (int step : row) c.seq.push_back(mod(c.seq.back() + step, n));
  }
  return c;
}

std::vector<int> half_generators(int n) {
  std::vector<int> gens((n - 3) / 2);
  std::iota(gens.begin(), gens.end(), 1);
  return gens;
}

}  // namespace

Construction construct_odd_max(int n) {
  require(n >= 9 && n % 2 == 1, "construct_odd_max: n must be odd and at least 9");
  if (n <= 21) {
    Construction c = archive_entry("odd_max_n" + std::to_string(n));
    c.name = "odd_max(" + std::to_string(n) + ")";
    return c;
  }
  const auto blocks = odd_max_blocks(block_scheme(n));
  return finish("odd_max(" + std::to_string(n) + ")", circulant(n, half_generators(n)),
                {{0, {walk_blocks(blocks[0], n), walk_blocks(blocks[1], n)}}});
}

std::vector<int> odd_max_trace(const Construction& c) {
  const int n = c.graph.order();
  const AvoidanceCertificate& cert = c.from(0);
  require(cert.k() == 2, "odd_max_trace: expected a pair");
  std::vector<int> trace;
  for (std::size_t i = 1; i < cert.circuits[0].seq.size(); ++i) {
    trace.push_back(mod(cert.circuits[1].at(i) - cert.circuits[0].at(i), n));
  }
  return trace;
}

std::vector<int> odd_max_expected_trace(int n) {
  require(n >= 23 && n % 2 == 1, "odd_max_expected_trace: n must be odd and at least 23");
  const int f = (n - 3) / 2;
  std::vector<int> trace;
  for (int p = 1; p <= n; ++p) {
    for (int q = 1; q <= f; ++q) {
      int d = f + 1;
      if (p == f + 7 || p == f + 8) {
        if (q == f - 2 || q == f - 1) d = f + 2;
      } else if (p >= f + 9 && p <= 2 * f) {
        if (q == f - 1) d = f + 2;
      } else if (p == 2 * f + 1 || p == 2 * f + 2) {
        if (q >= f - 1) d = f + 2;
      } else if (p == 2 * f + 3) {
        if (q == f - 1) d = f + 2;
        if (q == f) d = 0;
      }
      trace.push_back(d);
    }
  }
  return trace;
}

// ---------------------------------------------------------------------------
// Even orders.

Construction construct_0mod4_max(int n) {
  require(n >= 8 && n % 4 == 0, "construct_0mod4_max: n must be 0 mod 4 and at least 8");
  const std::vector<int> parts(static_cast<std::size_t>(n / 4), 4);
  const Graph g = complete_multipartite(parts);
  // a_i = i, b_i = 4 + i.
  const Graph reduced = without(g, {{0, 4}, {0, 5}, {3, 4}, {3, 5}});
  const Circuit e = hierholzer(reduced, 5);
  Circuit c1{concat({{0, 4, 3}, e.seq, {0}})};
  const Circuit c2 =
      parallel_partner(c1, [](Vertex v) { return 4 * (v / 4) + (v + 1) % 4; }, 2);
  return finish("0mod4(" + std::to_string(n) + ")", g, {{0, {c1, c2}}});
}

Construction extend_multipartite(const Construction& base, int part) {
  const Graph& g = base.graph;
  const int n = g.order();
  require(part >= 2 && n % part == 0 && n / part >= 2,
          "extend_multipartite: order is not a multiple of the part size");
  const int parts = n / part;
  require(g == complete_multipartite(std::vector<int>(static_cast<std::size_t>(parts), part)),
          "extend_multipartite: host is not the complete multipartite graph with this part size");
  const Graph bigger = complete_multipartite(std::vector<int>(static_cast<std::size_t>(parts + 1), part));
  const Circuit cross = hierholzer(complete_bipartite(part, part), 0);
  const Vertex z0 = n;

  Starts starts;
  for (const AvoidanceCertificate& cert : base.certificates) {
    require(cert.verified, "extend_multipartite: base certificate is not verified");
    std::vector<Circuit> circuits = cert.circuits;
    for (int q = 0; q < parts; ++q) {
      const auto& lead = circuits[0].seq;
      std::size_t at = 0;
      for (std::size_t i = 1; i + 1 < lead.size(); ++i) {
        if (lead[i] / part == q) {
          at = i;
          break;
        }
      }
      require(at != 0, "extend_multipartite: first circuit never passes through part " + std::to_string(q));
      for (Circuit& c : circuits) {
        const Vertex w = c.seq[at];
        require(w / part == q, "extend_multipartite: circuits are not in the same part at the splice");
        const int shift = w - q * part;
        const Circuit inserted = mapped(cross, [&](Vertex x) {
          return x < part ? q * part + (x + shift) % part : z0 + (x - part + shift) % part;
        });
        std::vector<Vertex> seq(c.seq.begin(), c.seq.begin() + static_cast<std::ptrdiff_t>(at));
        seq.insert(seq.end(), inserted.seq.begin(), inserted.seq.end());
        seq.insert(seq.end(), c.seq.begin() + static_cast<std::ptrdiff_t>(at) + 1, c.seq.end());
        c.seq = std::move(seq);
      }
    }
    starts.emplace_back(cert.start, std::move(circuits));
  }
  return finish(base.name + "+part", bigger, starts);
}

Construction construct_2mod4_max(int n) {
  require(n >= 10 && n % 4 == 2, "construct_2mod4_max: n must be 2 mod 4 and at least 10");
  if (n == 10) {
    Construction c = archive_entry("two_mod4_n10");
    c.name = "2mod4(10)";
    return c;
  }
  std::vector<int> parts(static_cast<std::size_t>((n - 6) / 4), 4);
  parts.push_back(6);
  Graph g = complete_multipartite(parts);
  const Vertex z = n - 6;  // z_i = z + i
  for (int i = 0; i < 6; ++i) g.add_edge(z + i, z + (i + 1) % 6);
  auto shift = [z](Vertex v) { return v >= z ? z + (v - z + 2) % 6 : 4 * (v / 4) + (v + 1) % 4; };

  const Circuit ea = hierholzer(without(g, {{0, 4}, {0, 5}, {3, 4}, {3, 5}}), 5);
  Circuit a1{concat({{0, 4, 3}, ea.seq, {0}})};
  Circuit a2 = parallel_partner(a1, shift, 2);

  const Circuit ez = hierholzer(without(g, {{z, 0}, {0, z + 4}, {z + 4, 1}, {1, z}}), 1);
  Circuit z1{concat({{z, 0, z + 4}, ez.seq, {z}})};
  Circuit z2 = parallel_partner(z1, shift, 2);
  return finish("2mod4(" + std::to_string(n) + ")", g, {{0, {a1, a2}}, {z, {z1, z2}}});
}

// ---------------------------------------------------------------------------
// Doubling.

namespace {

// Opens every circuit where the first returns to its start and inserts the
// closed walk `inserted` (from 0) moved by the current vertex.
Doubling splice_doubling(std::string name, Graph host, int n, const AvoidanceCertificate& cert,
                         const Circuit& inserted) {
  const auto& lead = cert.circuits[0].seq;
  const auto ret = std::find(lead.begin() + 1, lead.end(), Vertex{0});
  const auto at = static_cast<std::size_t>(ret - lead.begin());
  Doubling out;
  std::vector<Circuit> circuits;
  for (const Circuit& c : cert.circuits) {
    const int z = c.seq[at];
    if (!circuits.empty()) out.offsets.push_back(z);
    const Circuit moved = mapped(inserted, [&](Vertex x) { return x < n ? (x + z) % n : n + (x - n + z) % n; });
    std::vector<Vertex> seq(c.seq.begin(), c.seq.begin() + static_cast<std::ptrdiff_t>(at));
    seq.insert(seq.end(), moved.seq.begin(), moved.seq.end());
    seq.insert(seq.end(), c.seq.begin() + static_cast<std::ptrdiff_t>(at) + 1, c.seq.end());
    circuits.push_back(Circuit{std::move(seq)});
  }
  out.result = finish(std::move(name), std::move(host), {{0, std::move(circuits)}});
  return out;
}

void require_base(const Graph& g, const AvoidanceCertificate& cert, const char* where) {
  require(cert.verified && cert.start == 0 && !certificate_problem(g, cert),
          std::string(where) + ": needs a verified certificate from vertex 0 on the base graph");
}

Graph doubled_complete_minus_cycle_host(int m) {
  const int n = 2 * m + 1;
  std::vector<int> gens;
  for (int s = 2; s <= m; ++s) gens.push_back(s);
  const Graph base = circulant(n, gens);
  Graph g(2 * n);
  for (const auto& [a, b] : base.edges()) {
    g.add_edge(a, b);
    g.add_edge(n + a, n + b);
  }
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = 0; y < n; ++y) {
      if (x != y) g.add_edge(x, n + y);
    }
  }
  return g;
}

}  // namespace

Doubling double_circulant(int n, const std::vector<int>& generators, const AvoidanceCertificate& cert) {
  const Graph base = circulant(n, generators);
  require_base(base, cert, "double_circulant");
  Graph host(2 * n);
  Graph added(2 * n);
  for (const auto& [a, b] : base.edges()) host.add_edge(a, b);
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = 0; j < n; ++j) {
      if (!base.adjacent(i, j)) continue;  // j = i + s for some connection element s
      if (!added.adjacent(i, n + j)) added.add_edge(i, n + j);
      if (i < j) added.add_edge(n + i, n + j);
    }
  }
  for (const auto& [a, b] : added.edges()) host.add_edge(a, b);
  return splice_doubling("double(" + std::to_string(n) + ")", std::move(host), n, cert, hierholzer(added, 0));
}

Doubling double_complete_minus_cycle(int m, const AvoidanceCertificate& pair) {
  require(m >= 2, "double_complete_minus_cycle: m must be at least 2");
  const int n = 2 * m + 1;
  std::vector<int> gens;
  for (int s = 2; s <= m; ++s) gens.push_back(s);
  require_base(circulant(n, gens), pair, "double_complete_minus_cycle");
  Circuit inserted{{0}};
  const auto& c1 = pair.circuits[0].seq;
  for (std::size_t i = 0; i + 1 < c1.size(); ++i) {
    inserted.seq.insert(inserted.seq.end(), {n + c1[i + 1], n + c1[i], c1[i + 1]});
  }
  for (int t = 1; t <= 2 * n; ++t) inserted.seq.push_back(t % 2 == 1 ? n + t % n : t % n);
  return splice_doubling("double_kn(" + std::to_string(2 * n) + ")", doubled_complete_minus_cycle_host(m), n,
                         pair, inserted);
}

// ---------------------------------------------------------------------------
// Bipartite hosts.

Construction construct_bipartite_pair(const Graph& g, Vertex v) {
  require(v >= 0 && v < g.order(), "construct_bipartite_pair: vertex out of range");
  require(is_eulerian(g) && bipartition(g).has_value(), "construct_bipartite_pair: host must be bipartite Eulerian");
  const VertexMask nv = g.neighbours(v);
  for (Vertex w = 0; w < g.order(); ++w) {
    if (!((nv >> w) & 1U)) continue;
    for (Vertex x = w + 1; x < g.order(); ++x) {
      if (!((nv >> x) & 1U)) continue;
      const VertexMask common = g.neighbours(w) & g.neighbours(x) & ~bit(v);
      for (Vertex t = 0; t < g.order(); ++t) {
        if (!((common >> t) & 1U)) continue;
        for (Vertex u = 0; u < g.order(); ++u) {
          if (u == t || !((common >> u) & 1U)) continue;
          const Graph rest = without(g, {{v, w}, {v, x}, {t, w}, {t, x}, {u, w}, {u, x}});
          Circuit trail;
          try {
            trail = euler_trail(rest, w, x);
          } catch (const GraphError&) {
            continue;  // removal disconnects the remaining edges
          }
          Circuit c1{concat({{v, x, u}, trail.seq, {t, w, v}})};
          Circuit c2{concat({{v, w, t, x, u}, trail.seq, {v}})};
          return finish("bipartite_pair", g, {{v, {c1, c2}}});
        }
      }
    }
  }
  throw ConstructionError("construct_bipartite_pair: no removable K_{3,2} with vertex " + std::to_string(v) +
                          " on its side of three");
}

EdgeGrid zigzag_grid(int rows, int cols) {
  require(rows >= 2 && cols >= 2 && rows % 2 == 0 && cols % 2 == 0, "zigzag_grid: sides must be even and >= 2");
  EdgeGrid grid(static_cast<std::size_t>(rows), std::vector<int>(static_cast<std::size_t>(cols), 0));
  int r = 0;
  int c = 0;
  int next = 1;
  grid[0][0] = next++;
  auto move = [&](char dir) {
    if (next > rows * cols) return;
    if (dir == 'D') r = (r + 1) % rows;
    if (dir == 'R') c = (c + 1) % cols;
    if (dir == 'L') c = (c + cols - 1) % cols;
    require(grid[r][c] == 0, "zigzag_grid: cell visited twice");
    grid[r][c] = next++;
  };
  for (int outer = 0; outer < cols / 2; ++outer) {
    move('D');
    move('R');
    for (int inner = 0; inner < rows / 2 - 1; ++inner) {
      for (char dir : {'D', 'R', 'D', 'L'}) move(dir);
    }
    move('D');
    move('R');
  }
  return grid;
}

std::vector<EdgeGrid> derived_grids(const EdgeGrid& q, int count) {
  const int rows = static_cast<int>(q.size());
  const int cols = static_cast<int>(q.at(0).size());
  require(count >= 1 && count <= rows - 1 && count <= cols, "derived_grids: count out of range");
  const int last = rows * cols;
  std::vector<EdgeGrid> out{q};
  EdgeGrid shifted = q;
  for (int i = 2; i <= count; ++i) {
    EdgeGrid next = shifted;
    for (int r = 0; r < rows; ++r) {
      const int from = r == 0 ? 0 : (r == rows - 1 ? 1 : r + 1);
      for (int c = 0; c < cols; ++c) next[r][(c + 1) % cols] = shifted[from][c];
    }
    shifted = next;
    for (int c = 0; c < cols; ++c) {
      if (next[0][c] != 1 && next[0][c] != last) std::swap(next[0][c], next[i][c]);
    }
    out.push_back(std::move(next));
  }
  return out;
}

Circuit grid_circuit(const EdgeGrid& grid, Vertex row_base, Vertex col_base) {
  const int rows = static_cast<int>(grid.size());
  const int cols = static_cast<int>(grid.at(0).size());
  std::vector<std::pair<int, int>> cell(static_cast<std::size_t>(rows * cols + 1), {-1, -1});
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      const int k = grid[r][c];
      require(k >= 1 && k <= rows * cols && cell[k].first < 0, "grid_circuit: grid is not a numbering");
      cell[k] = {r, c};
    }
  }
  Circuit out{{row_base}};
  bool at_row = true;
  int where = 0;
  for (int k = 1; k <= rows * cols; ++k) {
    const auto [r, c] = cell[k];
    require((at_row ? r : c) == where, "grid_circuit: step " + std::to_string(k) + " does not continue the walk");
    where = at_row ? c : r;
    at_row = !at_row;
    out.seq.push_back(at_row ? row_base + where : col_base + where);
  }
  return out;
}

namespace {

std::vector<Circuit> grid_circuits(int rows, int cols, int count, Vertex row_base, Vertex col_base) {
  std::vector<Circuit> out;
  for (const EdgeGrid& grid : derived_grids(zigzag_grid(rows, cols), count)) {
    out.push_back(grid_circuit(grid, row_base, col_base));
  }
  return out;
}

}  // namespace

Construction construct_square_family(int s) {
  require(s >= 2, "construct_square_family: s must be at least 2");
  return finish("square(" + std::to_string(s) + ")", complete_bipartite(2 * s, 2 * s),
                {{0, grid_circuits(2 * s, 2 * s, 2 * s - 1, 0, 2 * s)}});
}

Construction construct_rectangle_family(int r, int s) {
  require(r >= 1 && r < s, "construct_rectangle_family: need 1 <= r < s");
  return finish("rectangle(" + std::to_string(r) + "," + std::to_string(s) + ")", complete_bipartite(2 * r, 2 * s),
                {{0, grid_circuits(2 * r, 2 * s, 2 * r - 1, 0, 2 * r)},
                 {2 * r, grid_circuits(2 * s, 2 * r, 2 * r, 2 * r, 0)}});
}

// ---------------------------------------------------------------------------
// Two vertices of degree four joined by four paths.

namespace {

// Paths listed from u to v.
struct Theta {
  Vertex u = 0;
  Vertex v = 1;
  std::array<std::vector<Vertex>, 4> paths;

  Theta reversed() const {
    Theta t{v, u, paths};
    for (auto& p : t.paths) std::reverse(p.begin(), p.end());
    return t;
  }
};

// Builds a closed walk from path pieces.
class Walk {
 public:
  explicit Walk(Vertex start) { seq_.push_back(start); }

  // Whole path p from one end to the other, ending at `to`.
  Walk& cross(const Theta& t, int p, Vertex to) {
    const auto& in = t.paths[p];
    if (to == t.v) {
      seq_.insert(seq_.end(), in.begin(), in.end());
    } else {
      seq_.insert(seq_.end(), in.rbegin(), in.rend());
    }
    seq_.push_back(to);
    return *this;
  }
  // From interior index i of path p to the end `to`.
  Walk& leave(const Theta& t, int p, std::size_t i, Vertex to) {
    const auto& in = t.paths[p];
    if (to == t.v) {
      seq_.insert(seq_.end(), in.begin() + static_cast<std::ptrdiff_t>(i) + 1, in.end());
    } else {
      for (std::size_t k = i; k-- > 0;) seq_.push_back(in[k]);
    }
    seq_.push_back(to);
    return *this;
  }
  // From the end `from` along path p to interior index i.
  Walk& enter(const Theta& t, int p, Vertex from, std::size_t i) {
    const auto& in = t.paths[p];
    if (from == t.u) {
      seq_.insert(seq_.end(), in.begin(), in.begin() + static_cast<std::ptrdiff_t>(i) + 1);
    } else {
      for (std::size_t k = in.size(); k-- > i;) seq_.push_back(in[k]);
    }
    return *this;
  }
  Walk& to(Vertex x) {
    seq_.push_back(x);
    return *this;
  }
  Circuit done() const { return Circuit{seq_}; }

 private:
  std::vector<Vertex> seq_;
};

Theta theta_of(int a, int b, int c, int d) {
  const GammaLayout layout = gamma_layout(a, b, c, d);
  return Theta{layout.u, layout.v, layout.paths};
}

// Path index and interior position of vertex x, if it is interior.
std::optional<std::pair<int, std::size_t>> locate(const Theta& t, Vertex x) {
  for (int p = 0; p < 4; ++p) {
    const auto& in = t.paths[p];
    if (const auto it = std::ranges::find(in, x); it != in.end()) {
      return std::pair{p, static_cast<std::size_t>(it - in.begin())};
    }
  }
  return std::nullopt;
}

constexpr int A = 0;
constexpr int B = 1;
constexpr int C = 2;
constexpr int D = 3;

std::vector<Circuit> gamma_a0_pair(const Theta& t, Vertex start) {
  const Vertex u = t.u;
  const Vertex v = t.v;
  if (start == u) {
    return {Walk(u).cross(t, D, v).cross(t, C, u).cross(t, B, v).to(u).done(),
            Walk(u).to(v).cross(t, B, u).cross(t, D, v).cross(t, C, u).done()};
  }
  if (start == v) return gamma_a0_pair(t.reversed(), start);
  const auto [x, i] = *locate(t, start);
  const std::size_t xu = i;
  const std::size_t xv = t.paths[x].size() - 1 - i;
  if (xu > xv) return gamma_a0_pair(t.reversed(), start);
  std::array<int, 2> rest{};
  int k = 0;
  for (int p : {B, C, D}) {
    if (p != x) rest[k++] = p;
  }
  if (t.paths[rest[0]].size() > t.paths[rest[1]].size()) std::swap(rest[0], rest[1]);
  const int y = rest[0];
  const int z = rest[1];
  if (xu + 1 < xv) {
    return {Walk(start).leave(t, x, i, u).to(v).cross(t, z, u).cross(t, y, v).enter(t, x, v, i).done(),
            Walk(start).leave(t, x, i, v).cross(t, z, u).cross(t, y, v).to(u).enter(t, x, u, i).done()};
  }
  return {Walk(start).leave(t, x, i, v).to(u).cross(t, z, v).cross(t, y, u).enter(t, x, u, i).done(),
          Walk(start).leave(t, x, i, u).cross(t, z, v).cross(t, y, u).to(v).enter(t, x, v, i).done()};
}

std::vector<Circuit> gamma_14cc_pair(const Theta& t, Vertex start) {
  const Vertex u = t.u;
  const Vertex v = t.v;
  const Vertex a = t.paths[A].at(0);
  const std::size_t m = t.paths[C].size();
  if (start == v) return gamma_14cc_pair(t.reversed(), start);
  if (start == u) {
    return {Walk(u).to(a).to(v).cross(t, C, u).cross(t, D, v).cross(t, B, u).done(),
            Walk(u).cross(t, B, v).cross(t, C, u).cross(t, D, v).to(a).to(u).done()};
  }
  if (start == a) {
    return {Walk(a).to(u).cross(t, C, v).cross(t, D, u).cross(t, B, v).to(a).done(),
            Walk(a).to(v).cross(t, B, u).cross(t, C, v).cross(t, D, u).to(a).done()};
  }
  const auto [p, i] = *locate(t, start);
  if (p == D) {
    Theta swapped = t;
    std::swap(swapped.paths[C], swapped.paths[D]);
    return gamma_14cc_pair(swapped, start);
  }
  if (p == B) {
    if (i >= 2) return gamma_14cc_pair(t.reversed(), start);
    return {Walk(start).leave(t, B, i, u).cross(t, C, v).cross(t, D, u).to(a).to(v).enter(t, B, v, i).done(),
            Walk(start).leave(t, B, i, v).to(a).to(u).cross(t, C, v).cross(t, D, u).enter(t, B, u, i).done()};
  }
  // On C; positions are 1-based in the case split. The middle vertex of an
  // odd-length C is its own mirror image and takes the second case.
  const std::size_t pos = i + 1;
  if (2 * pos > m + 1) return gamma_14cc_pair(t.reversed(), start);
  Circuit first = Walk(start).leave(t, C, i, u).cross(t, D, v).cross(t, B, u).to(a).to(v).enter(t, C, v, i).done();
  Circuit second =
      m >= 3 && pos <= (m - 3) / 2
          ? Walk(start).leave(t, C, i, v).cross(t, B, u).cross(t, D, v).to(a).to(u).enter(t, C, u, i).done()
          : Walk(start).leave(t, C, i, v).to(a).to(u).cross(t, D, v).cross(t, B, u).enter(t, C, u, i).done();
  return {std::move(first), std::move(second)};
}

}  // namespace

AvoidanceCertificate construct_gamma_a0(int b, int c, int d, Vertex start) {
  require(b % 2 == 0 && c % 2 == 0 && d % 2 == 0 && 2 <= b && b <= c && c <= d && d < b + c + 3,
          "construct_gamma_a0: need even 2 <= b <= c <= d < b+c+3");
  const Graph g = gamma_graph(0, b, c, d);
  require(start >= 0 && start < g.order(), "construct_gamma_a0: start out of range");
  return finish("gamma_a0", g, {{start, gamma_a0_pair(theta_of(0, b, c, d), start)}}).certificates.front();
}

AvoidanceCertificate construct_gamma_14cc(int c, Vertex start) {
  require(c >= 4, "construct_gamma_14cc: c must be at least 4");
  const Graph g = gamma_graph(1, 4, c, c);
  require(start >= 0 && start < g.order(), "construct_gamma_14cc: start out of range");
  return finish("gamma_14cc", g, {{start, gamma_14cc_pair(theta_of(1, 4, c, c), start)}}).certificates.front();
}

// ---------------------------------------------------------------------------

Graph construct_4reg_non_doubly(int n) {
  require(n >= 11, "construct_4reg_non_doubly: n must be at least 11");
  const std::vector<int> near{1, 2};
  auto place = [](Graph& g, const Graph& part, Vertex offset) {
    for (const auto& [a, b] : part.edges()) g.add_edge(offset + a, offset + b);
  };
  Graph g(n);
  const Vertex apex = n - 1;
  const int s = n / 2;
  Graph h = circulant(n % 2 == 1 ? s : s - 1, near);
  h.remove_edge(0, 1);
  place(g, h, 0);
  const Vertex second = h.order();
  if (n % 2 == 1) {
    place(g, h, second);
  } else {
    Graph k = circulant(s, near);
    k.remove_edge(0, s - 1);
    k.remove_edge(1, 2);
    k.add_edge(s - 1, 2);
    place(g, k, second);
  }
  for (Vertex x : {0, 1, second, second + 1}) g.add_edge(apex, x);
  require(g.min_degree() == 4 && g.max_degree() == 4, "construct_4reg_non_doubly: result is not 4-regular");
  return g;
}

// ---------------------------------------------------------------------------
// Stored circuits.

namespace {

struct StoredText {
  const char* key;
  int prime_offset;
  std::uint64_t checksum;
  const char* text;
};

constexpr StoredText kStored[] = {
#include "archive_text.inc"
};

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::vector<Circuit> load_stored(std::string_view key) {
  for (const StoredText& e : kStored) {
    if (key != e.key) continue;
    const std::string_view text(e.text);
    if (fnv1a(text) != e.checksum) throw VerificationError("archive: checksum mismatch for " + std::string(key));
    std::vector<Circuit> out;
    std::istringstream lines{std::string(text)};
    std::string line;
    while (std::getline(lines, line)) {
      std::istringstream tokens(line);
      std::string token;
      Circuit c;
      while (tokens >> token) {
        const bool primed = token.back() == '\'';
        if (primed) token.pop_back();
        c.seq.push_back(std::stoi(token) + (primed ? e.prime_offset : 0));
      }
      if (!c.seq.empty()) out.push_back(std::move(c));
    }
    return out;
  }
  throw ConstructionError("archive: no stored text " + std::string(key));
}

Graph two_mod4_n10_host() {
  Graph g = complete_bipartite(4, 6);
  for (int i = 0; i < 6; ++i) g.add_edge(4 + i, 4 + (i + 1) % 6);
  return g;
}

struct ArchiveHost {
  std::string key;
  std::function<Graph()> host;
  std::vector<std::string> texts;  // one stored text per start
};

std::vector<ArchiveHost> archive_hosts() {
  std::vector<ArchiveHost> out;
  const std::vector<std::pair<int, std::vector<int>>> odd = {
      {9, {1, 2, 3}},          {11, {1, 2, 3, 4}},          {13, {2, 3, 4, 5, 6}},
      {15, {1, 2, 3, 4, 5, 6}}, {17, {1, 2, 3, 4, 5, 6, 7}}, {19, {1, 2, 3, 4, 5, 6, 7, 8}},
      {21, {1, 2, 3, 4, 5, 6, 7, 8, 9}}};
  for (const auto& [n, gens] : odd) {
    const std::string key = "odd_max_n" + std::to_string(n);
    out.push_back({key, [n, gens] { return circulant(n, gens); }, {key}});
  }
  out.push_back({"two_mod4_n10", two_mod4_n10_host, {"two_mod4_n10_from0", "two_mod4_n10_from4"}});
  out.push_back({"doubled_n10", [] { return doubled_complete_minus_cycle_host(2); }, {"doubled_n10"}});
  out.push_back({"doubled_n14", [] { return doubled_complete_minus_cycle_host(3); }, {"doubled_n14"}});
  out.push_back({"doubling_base_n9", [] { return circulant(9, std::vector<int>{2, 3, 4}); }, {"doubling_base_n9"}});
  out.push_back({"doubled_n18", [] { return doubled_complete_minus_cycle_host(4); }, {"doubled_n18"}});
  out.push_back({"kstar55", [] { return circulant(10, std::vector<int>{1, 3}); }, {"kstar55"}});
  out.push_back({"kstar77", [] { return circulant(14, std::vector<int>{1, 3, 5}); }, {"kstar77"}});
  return out;
}

}  // namespace

Construction archive_entry(std::string_view key) {
  for (const ArchiveHost& entry : archive_hosts()) {
    if (entry.key != key) continue;
    Starts starts;
    for (const std::string& text : entry.texts) {
      std::vector<Circuit> circuits = load_stored(text);
      require(!circuits.empty(), "archive: empty entry " + text);
      const Vertex start = circuits.front().start();
      starts.emplace_back(start, std::move(circuits));
    }
    return finish(entry.key, entry.host(), starts);
  }
  throw ConstructionError("archive: unknown key " + std::string(key));
}

std::vector<std::string> archive_keys() {
  std::vector<std::string> keys;
  for (const ArchiveHost& entry : archive_hosts()) keys.push_back(entry.key);
  return keys;
}

}  // namespace avoid
