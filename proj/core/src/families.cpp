#include "avoid/families.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <map>
#include <numeric>
#include <set>

#include "avoid/canonical.hpp"

namespace avoid {

namespace {

const std::map<std::string, Family, std::less<>>& family_names() {
  static const std::map<std::string, Family, std::less<>> names{
      {"cycle", Family::cycle},
      {"complete", Family::complete},
      {"kbip", Family::complete_bipartite},
      {"km", Family::complete_multipartite},
      {"kstar", Family::kstar},
      {"circulant", Family::circulant},
      {"gamma", Family::gamma},
      {"lambda", Family::lambda},
      {"kn_minus_ham", Family::kn_minus_ham_cycle},
      {"kn_minus_triangles", Family::kn_minus_triangles},
      {"complement", Family::complement},
  };
  return names;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int parse_int(std::string_view token, std::string_view whole) {
  token = trim(token);
  int value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
    throw GraphError("family spec '" + std::string(whole) + "': bad number '" +
                     std::string(token) + "'");
  }
  return value;
}

std::vector<int> parse_list(std::string_view body, std::string_view whole) {
  std::vector<int> out;
  while (!body.empty()) {
    const auto comma = body.find(',');
    out.push_back(parse_int(body.substr(0, comma), whole));
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  return out;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw GraphError(what);
}

void require_count(const FamilySpec& spec, std::size_t count) {
  require(spec.params.size() == count,
          spec.to_string() + ": expected " + std::to_string(count) + " parameters");
}

// Adds a path u - inner[0] - ... - inner.back() - v.
void add_path(Graph& g, Vertex u, const std::vector<Vertex>& inner, Vertex v) {
  Vertex prev = u;
  for (Vertex x : inner) {
    g.add_edge(prev, x);
    prev = x;
  }
  g.add_edge(prev, v);
}

}  // namespace

std::string FamilySpec::to_string() const {
  std::string name;
  for (const auto& [key, value] : family_names()) {
    if (value == family) name = key;
  }
  if (family == Family::complement) {
    return name + "(" + (inner ? inner->to_string() : std::string("?")) + ")";
  }
  std::string out = name + "(";
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i > 0) out += (family == Family::circulant && i == 1) ? ";" : ",";
    out += std::to_string(params[i]);
  }
  return out + ")";
}

FamilySpec parse_family(std::string_view text) {
  const std::string_view whole = trim(text);
  const auto open = whole.find('(');
  if (open == std::string_view::npos || whole.back() != ')') {
    throw GraphError("family spec '" + std::string(whole) + "': expected name(parameters)");
  }
  const std::string_view name = trim(whole.substr(0, open));
  const std::string_view body = whole.substr(open + 1, whole.size() - open - 2);
  const auto& names = family_names();
  const auto it = names.find(name);
  if (it == names.end()) {
    throw GraphError("family spec '" + std::string(whole) + "': unknown family '" +
                     std::string(name) + "'");
  }
  FamilySpec spec;
  spec.family = it->second;
  if (spec.family == Family::complement) {
    spec.inner = std::make_shared<FamilySpec>(parse_family(body));
  } else if (spec.family == Family::circulant) {
    const auto semi = body.find(';');
    if (semi == std::string_view::npos) {
      throw GraphError("family spec '" + std::string(whole) + "': expected circulant(n;g1,...)");
    }
    spec.params.push_back(parse_int(body.substr(0, semi), whole));
    for (int g : parse_list(body.substr(semi + 1), whole)) spec.params.push_back(g);
  } else {
    spec.params = parse_list(body, whole);
  }
  return spec;
}

Graph cycle_graph(int n) {
  require(n >= 3, "cycle: n must be at least 3");
  Graph g(n);
  for (Vertex i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph complete_graph(int n) {
  require(n >= 1, "complete: n must be positive");
  Graph g(n);
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) g.add_edge(i, j);
  }
  return g;
}

Graph complete_multipartite(std::span<const int> parts) {
  require(!parts.empty(), "km: at least one part");
  require(std::all_of(parts.begin(), parts.end(), [](int p) { return p >= 1; }),
          "km: part sizes must be positive");
  const int n = std::accumulate(parts.begin(), parts.end(), 0);
  require(n <= kMaxVertices, "km: more than 64 vertices");
  std::vector<int> part_of;
  for (std::size_t p = 0; p < parts.size(); ++p) part_of.insert(part_of.end(), parts[p], static_cast<int>(p));
  Graph g(n);
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      if (part_of[i] != part_of[j]) g.add_edge(i, j);
    }
  }
  return g;
}

Graph complete_bipartite(int r, int s) {
  const std::array<int, 2> parts{r, s};
  return complete_multipartite(parts);
}

Graph kstar(int m) {
  require(m >= 2, "kstar: m must be at least 2");
  Graph g(2 * m);
  for (Vertex i = 0; i < m; ++i) {
    for (Vertex j = 0; j < m; ++j) {
      if (i != j) g.add_edge(i, m + j);
    }
  }
  return g;
}

Graph circulant(int n, std::span<const int> generators) {
  require(n >= 3, "circulant: n must be at least 3");
  require(!generators.empty(), "circulant: empty generator set");
  Graph g(n);
  for (int x : generators) {
    require(x >= 1 && x <= n / 2,
            "circulant: generator " + std::to_string(x) + " outside 1.." + std::to_string(n / 2));
    for (Vertex i = 0; i < n; ++i) {
      const Vertex j = (i + x) % n;
      if (!g.adjacent(i, j)) g.add_edge(i, j);
    }
  }
  return g;
}

GammaLayout gamma_layout(int a, int b, int c, int d) {
  const std::array<int, 4> lengths{a, b, c, d};
  require(a >= 0 && a <= b && b <= c && c <= d, "gamma: need 0 <= a <= b <= c <= d");
  require(b >= 1, "gamma: at most one path may be the bare edge uv");
  GammaLayout layout;
  Vertex next = 2;
  for (int p = 0; p < 4; ++p) {
    for (int i = 0; i < lengths[p]; ++i) layout.paths[p].push_back(next++);
  }
  return layout;
}

Graph gamma_graph(int a, int b, int c, int d) {
  const GammaLayout layout = gamma_layout(a, b, c, d);
  Graph g(2 + a + b + c + d);
  for (const auto& path : layout.paths) add_path(g, layout.u, path, layout.v);
  return g;
}

Graph lambda_graph(int a, int b, int c) {
  require(a >= 1 && a <= b && b <= c, "lambda: need 1 <= a <= b <= c");
  const int n = a + b + c + 3;
  Graph g = cycle_graph(n);
  const Vertex u = 0;
  const Vertex v = a + 1;
  const Vertex w = a + b + 2;
  g.add_edge(u, v);
  g.add_edge(v, w);
  g.add_edge(w, u);
  return g;
}

Graph kn_minus_ham_cycle(int n) {
  require(n >= 5, "kn_minus_ham: n must be at least 5");
  Graph g = complete_graph(n);
  for (Vertex i = 0; i < n; ++i) g.remove_edge(i, (i + 1) % n);
  return g;
}

Graph kn_minus_triangles(int n) {
  require(n >= 6 && n % 3 == 0, "kn_minus_triangles: n must be a multiple of 3, at least 6");
  Graph g = complete_graph(n);
  for (Vertex i = 0; i < n; ++i) g.remove_edge(i, (i + n / 3) % n);
  return g;
}

Graph generate(const FamilySpec& spec) {
  const auto& p = spec.params;
  switch (spec.family) {
    case Family::cycle:
      require_count(spec, 1);
      return cycle_graph(p[0]);
    case Family::complete:
      require_count(spec, 1);
      return complete_graph(p[0]);
    case Family::complete_bipartite:
      require_count(spec, 2);
      return complete_bipartite(p[0], p[1]);
    case Family::complete_multipartite:
      return complete_multipartite(p);
    case Family::kstar:
      require_count(spec, 1);
      return kstar(p[0]);
    case Family::circulant:
      require(p.size() >= 2, spec.to_string() + ": expected circulant(n;g1,...)");
      return circulant(p[0], std::span<const int>(p).subspan(1));
    case Family::gamma:
      require_count(spec, 4);
      return gamma_graph(p[0], p[1], p[2], p[3]);
    case Family::lambda:
      require_count(spec, 3);
      return lambda_graph(p[0], p[1], p[2]);
    case Family::kn_minus_ham_cycle:
      require_count(spec, 1);
      return kn_minus_ham_cycle(p[0]);
    case Family::kn_minus_triangles:
      require_count(spec, 1);
      return kn_minus_triangles(p[0]);
    case Family::complement:
      require(spec.inner != nullptr, "complement: missing inner spec");
      return avoid::complement(generate(*spec.inner));
  }
  throw GraphError("unknown family");
}

int edge_excess(const Graph& g) { return g.size() - g.order(); }

namespace {

// Adds a path from `from` to `to` through `interior` new vertices.
void add_path(Graph& g, Vertex from, Vertex to, int interior, Vertex& next) {
  Vertex prev = from;
  for (int i = 0; i < interior; ++i) {
    g.add_edge(prev, next);
    prev = next++;
  }
  g.add_edge(prev, to);
}

}  // namespace

std::vector<Graph> excess_two_graphs(int n) {
  if (n < 4 || n > kMaxVertices) throw GraphError("excess_two_graphs: order must be in 4..64");
  std::vector<Graph> out;
  std::set<std::string> seen;
  auto keep = [&](const Graph& g) {
    const CanonicalForm form = canonical(g);
    if (seen.insert(form.bytes).second) out.push_back(form.relabelled(g));
  };
  const int r = n - 2;  // degree-2 vertices when two vertices have degree 4
  for (int a = 0; a <= r; ++a) {
    for (int b = std::max(a, 1); a + 3 * b <= r; ++b) {
      for (int c = b; a + b + 2 * c <= r; ++c) keep(gamma_graph(a, b, c, r - a - b - c));
    }
  }
  // Cycles of x+1 and y+1 vertices at u and v, joined by paths with p <= q
  // interior vertices.
  for (int x = 2; x <= r; ++x) {
    for (int y = x; x + y <= r; ++y) {
      for (int p = 0; 2 * p <= r - x - y; ++p) {
        const int q = r - x - y - p;
        if (q == 0) continue;
        Graph g(n);
        Vertex next = 2;
        add_path(g, 0, 0, x, next);
        add_path(g, 1, 1, y, next);
        add_path(g, 0, 1, p, next);
        add_path(g, 0, 1, q, next);
        keep(g);
      }
    }
  }
  // Three cycles through vertex 0 with x <= y <= z further vertices.
  for (int x = 2; 3 * x <= n - 1; ++x) {
    for (int y = x; x + 2 * y <= n - 1; ++y) {
      const int z = n - 1 - x - y;
      Graph g(n);
      Vertex next = 1;
      add_path(g, 0, 0, x, next);
      add_path(g, 0, 0, y, next);
      add_path(g, 0, 0, z, next);
      keep(g);
    }
  }
  return out;
}

namespace {

struct FigureData {
  const char* key;
  int n;
  int m;
  int regular;     // common degree, 0 when irregular
  int bipartite;   // 1 or 0
  const char* edges;
};

constexpr FigureData kFigures[] = {
    {"fig1a", 8, 16, 4, 0, "0 3 0 4 0 5 0 6 1 4 1 5 1 6 1 7 2 4 2 5 2 6 2 7 3 5 3 6 3 7 4 7"},
    {"fig1b", 8, 16, 4, 0, "0 3 0 4 0 5 0 6 1 3 1 5 1 6 1 7 2 4 2 5 2 6 2 7 3 4 3 6 4 7 5 7"},
    {"fig1c", 8, 16, 4, 0, "0 3 0 4 0 5 0 7 1 3 1 5 1 6 1 7 2 4 2 5 2 6 2 7 3 4 3 6 4 6 5 7"},
    {"fig1d", 8, 16, 4, 0, "0 2 0 4 0 5 0 6 1 3 1 4 1 6 1 7 2 4 2 5 2 7 3 5 3 6 3 7 4 6 5 7"},
    {"fig1e", 8, 16, 4, 1, "0 2 0 4 0 1 0 7 1 3 1 5 1 6 2 3 2 5 2 6 3 4 3 7 4 5 4 6 5 7 6 7"},
    {"fig2_cube_complement", 8, 16, 4, 0,
     "0 3 0 5 0 6 0 7 1 2 1 4 1 6 1 7 2 4 2 5 2 7 3 4 3 5 3 6 4 7 5 6"},
    {"fig3a_excess1", 8, 9, 0, 0, "0 1 1 2 2 3 3 4 4 0 0 5 5 6 6 7 0 7"},
    {"fig3b_excess2", 10, 12, 0, 1, "0 1 1 2 5 0 1 8 6 8 6 7 1 7 2 5 4 9 3 4 1 9 1 3"},
    {"fig4_gamma1123", 9, 11, 0, 0, "0 2 1 2 0 3 1 3 0 4 4 5 1 5 0 6 6 7 7 8 1 8"},
    {"fig5a_gamma0222", 8, 10, 0, 1, "0 3 0 6 1 4 1 6 2 5 2 6 3 7 4 7 5 7 6 7"},
    {"fig5b_excess4", 8, 12, 0, 1, "0 4 0 5 0 6 0 7 1 4 1 5 1 6 1 7 2 6 2 7 3 6 3 7"},
    {"fig6a_order9_excess3", 9, 12, 0, 1, "0 6 0 7 1 6 1 7 2 6 2 8 3 6 3 8 4 7 4 8 5 7 5 8"},
    {"fig6b_order9_excess3", 9, 12, 0, 1, "0 4 0 6 1 5 1 7 2 6 2 7 3 6 3 7 4 8 5 8 6 8 7 8"},
    {"fig7_saturated12", 12, 24, 4, 1,
     "0 6 0 7 0 8 0 9 1 6 1 7 1 8 1 9 2 6 2 8 2 10 2 11 3 6 3 9 3 10 3 11 4 7 4 8 4 10 4 11 "
     "5 7 5 9 5 10 5 11"},
    {"fig8_order12_index1", 12, 24, 4, 0,
     "0 3 0 6 0 8 0 9 1 4 1 7 1 10 1 11 2 5 2 7 2 10 2 11 3 6 3 8 3 9 4 7 4 10 4 11 5 8 5 9 "
     "5 10 6 8 6 9 7 11"},
    {"fig9_lambda457", 19, 22, 0, 0,
     "0 1 1 2 2 3 3 4 4 5 5 6 6 7 7 8 8 9 9 10 10 11 11 12 12 13 13 14 14 15 15 16 16 17 17 "
     "18 18 0 1 9 9 15 1 15"},
};

// Alternative names used for the two order-12 graphs.
constexpr std::pair<const char*, const char*> kFigureAliases[] = {
    {"fig6_saturated12", "fig7_saturated12"},
    {"fig7_order12_index1", "fig8_order12_index1"},
};

}  // namespace

Graph figure_graph(std::string_view key) {
  for (const auto& [alias, target] : kFigureAliases) {
    if (key == alias) key = target;
  }
  for (const FigureData& fig : kFigures) {
    if (key != fig.key) continue;
    const Graph g = parse_edge_list(std::to_string(fig.n) + "\n" + fig.edges);
    const bool regular_ok =
        fig.regular == 0 ? g.min_degree() != g.max_degree() : g.min_degree() == fig.regular &&
                                                                  g.max_degree() == fig.regular;
    if (g.size() != fig.m || !regular_ok || bipartition(g).has_value() != (fig.bipartite == 1) ||
        !is_eulerian(g)) {
      throw std::logic_error("figure " + std::string(key) + ": stored graph fails its checks");
    }
    return g;
  }
  throw GraphError("unknown figure key '" + std::string(key) + "'");
}

std::vector<std::string> figure_keys() {
  std::vector<std::string> keys;
  for (const FigureData& fig : kFigures) keys.emplace_back(fig.key);
  for (const auto& [alias, target] : kFigureAliases) keys.emplace_back(alias);
  return keys;
}

}  // namespace avoid
