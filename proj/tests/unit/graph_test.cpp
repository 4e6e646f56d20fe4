#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "avoid/canonical.hpp"
#include "avoid/families.hpp"
#include "avoid/graph.hpp"
#include "avoid/graph6.hpp"

using namespace avoid;

namespace {

Graph random_graph(int n, double p, std::mt19937& rng) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      if (coin(rng)) g.add_edge(a, b);
    }
  }
  return g;
}

std::vector<Vertex> random_permutation(int n, std::mt19937& rng) {
  std::vector<Vertex> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

// Straight bit packing, written independently of the library encoder.
std::string reference_graph6(const Graph& g) {
  std::string out(1, static_cast<char>(g.order() + 63));
  std::vector<int> bits;
  for (Vertex j = 1; j < g.order(); ++j) {
    for (Vertex i = 0; i < j; ++i) bits.push_back(g.adjacent(i, j) ? 1 : 0);
  }
  while (bits.size() % 6 != 0) bits.push_back(0);
  for (std::size_t i = 0; i < bits.size(); i += 6) {
    int v = 0;
    for (std::size_t k = 0; k < 6; ++k) v = v * 2 + bits[i + k];
    out.push_back(static_cast<char>(v + 63));
  }
  return out;
}

}  // namespace

TEST_CASE("build rejects malformed edge lists") {
  const std::vector<std::pair<Vertex, Vertex>> triangle{{0, 1}, {1, 2}, {2, 0}};
  const Graph g = Graph::build(3, triangle);
  CHECK(g.size() == 3);
  CHECK(is_eulerian(g));
  const std::vector<std::pair<Vertex, Vertex>> twice{{0, 1}, {0, 1}};
  CHECK_THROWS_AS(Graph::build(4, twice), GraphError);
  const std::vector<std::pair<Vertex, Vertex>> loop{{2, 2}};
  CHECK_THROWS_AS(Graph::build(4, loop), GraphError);
  const std::vector<std::pair<Vertex, Vertex>> outside{{0, 4}};
  CHECK_THROWS_AS(Graph::build(4, outside), GraphError);
  CHECK_THROWS_AS(Graph(65), GraphError);
}

TEST_CASE("eulerian needs even degrees and connectivity") {
  CHECK(is_eulerian(cycle_graph(5)));
  CHECK_FALSE(is_eulerian(complete_graph(4)));
  Graph two(6);
  for (Vertex base : {0, 3}) {
    two.add_edge(base, base + 1);
    two.add_edge(base + 1, base + 2);
    two.add_edge(base + 2, base);
  }
  CHECK_FALSE(is_eulerian(two));
}

TEST_CASE("bipartition") {
  const auto k44 = bipartition(complete_bipartite(4, 4));
  REQUIRE(k44.has_value());
  CHECK(k44->first.size() == 4);
  CHECK(k44->second.size() == 4);
  CHECK(bipartition(gamma_graph(0, 2, 2, 2)).has_value());
  CHECK_FALSE(bipartition(cycle_graph(5)).has_value());
}

TEST_CASE("distances") {
  CHECK(distance(cycle_graph(6), 0, 3) == 3);
  const Graph g = gamma_graph(1, 1, 2, 3);
  CHECK(distance(g, 0, 1) == 2);
  for (const auto& [a, b] : g.edges()) CHECK(distance(g, a, b) == 1);
  Graph split(4);
  split.add_edge(0, 1);
  split.add_edge(2, 3);
  CHECK_FALSE(distance(split, 0, 3).has_value());
}

TEST_CASE("cut vertices") {
  Graph bowtie(5);
  for (auto [a, b] : {std::pair{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}}) bowtie.add_edge(a, b);
  CHECK(is_cut_vertex(bowtie, 2));
  CHECK_FALSE(is_cut_vertex(bowtie, 0));
  CHECK_FALSE(is_cut_vertex(cycle_graph(6), 3));
}

TEST_CASE("independence number") {
  CHECK(independence_number(cycle_graph(7), cycle_graph(7).all_vertices()) == 3);
  CHECK(independence_number(complete_graph(6), complete_graph(6).all_vertices()) == 1);
  const Graph k = complete_bipartite(3, 5);
  CHECK(independence_number(k, k.all_vertices()) == 5);
}

TEST_CASE("graph6 round trip and reference packing") {
  const Graph c3 = cycle_graph(3);
  CHECK(graph6_decode(graph6_encode(c3)) == c3);
  CHECK(graph6_encode(c3) == "Bw");
  CHECK(graph6_decode(">>graph6<<Bw") == c3);
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = random_graph(1 + trial % 10, 0.45, rng);
    const std::string text = graph6_encode(g);
    CHECK(text == reference_graph6(g));
    CHECK(graph6_decode(text) == g);
  }
  CHECK_THROWS_AS(graph6_decode(""), GraphError);
  CHECK_THROWS_AS(graph6_decode("D?"), GraphError);
  CHECK_THROWS_AS(graph6_decode("B\x7f"), GraphError);
}

TEST_CASE("edge list text") {
  const Graph g = parse_edge_list("# triangle\n3\n0 1\n1 2\n2 0\n");
  CHECK(g == cycle_graph(3));
  CHECK(parse_edge_list(format_edge_list(kstar(5))) == kstar(5));
  CHECK_THROWS_AS(parse_edge_list("3\n0 x\n"), GraphError);
}

TEST_CASE("canonical form is a complete isomorphism invariant") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 4 + trial % 7;
    const Graph g = random_graph(n, 0.5, rng);
    const Graph h = relabel(g, random_permutation(n, rng));
    CHECK(canonical(g).bytes == canonical(h).bytes);
    CHECK(isomorphic(g, h));
  }
  CHECK_FALSE(isomorphic(complete_bipartite(3, 3), circulant(6, std::vector<int>{1, 2})));
}

TEST_CASE("orbits") {
  CHECK(canonical(cycle_graph(5)).orbit_count() == 1);
  CHECK(canonical(complete_bipartite(4, 4)).orbit_count() == 1);
  CHECK(canonical(complete_bipartite(2, 4)).orbit_count() == 2);
  CHECK(canonical(figure_graph("fig7_saturated12")).orbit_count() > 1);
  for (int n : {9, 10, 13}) {
    CHECK(canonical(circulant(n, std::vector<int>{1, 3})).orbit_count() == 1);
  }
  const CanonicalForm f = canonical(gamma_graph(1, 1, 2, 3));
  for (const auto& perm : f.generators) {
    const Graph g = gamma_graph(1, 1, 2, 3);
    CHECK(relabel(g, perm) == g);
  }
}
