#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>

#include "avoid/canonical.hpp"
#include "avoid/census.hpp"
#include "avoid/families.hpp"
#include "avoid/graph6.hpp"
#include "avoid/search.hpp"

using namespace avoid;

namespace {

bool distinct_classes(const std::vector<Graph>& graphs) {
  std::set<std::string> seen;
  for (const Graph& g : graphs) {
    if (!seen.insert(canonical(g).bytes).second) return false;
  }
  return true;
}

Graph disjoint_cycles(const std::vector<int>& lengths) {
  int n = 0;
  for (int l : lengths) n += l;
  Graph g(n);
  Vertex base = 0;
  for (int l : lengths) {
    for (int i = 0; i < l; ++i) g.add_edge(base + i, base + (i + 1) % l);
    base += l;
  }
  return g;
}

}  // namespace

TEST_CASE("eulerian graph counts") {
  const std::vector<int> expected{1, 1, 4, 8, 37, 184};
  for (int n = 3; n <= 8; ++n) {
    const std::vector<Graph> graphs = eulerian_graphs(n);
    CHECK(static_cast<int>(graphs.size()) == expected[n - 3]);
    CHECK(distinct_classes(graphs));
    for (const Graph& g : graphs) CHECK(is_eulerian(g));
  }
  CHECK_THROWS_AS(eulerian_graphs(2), GraphError);
  CHECK_THROWS_AS(eulerian_graphs(11), GraphError);
}

TEST_CASE("4-regular graph counts") {
  const std::vector<int> expected{1, 1, 2, 6, 16, 59};
  for (int n = 5; n <= 10; ++n) {
    const std::vector<Graph> graphs = four_regular_graphs(n);
    CHECK(static_cast<int>(graphs.size()) == expected[n - 5]);
    CHECK(distinct_classes(graphs));
    for (const Graph& g : graphs) {
      CHECK(g.min_degree() == 4);
      CHECK(g.max_degree() == 4);
      CHECK(is_connected(g));
    }
  }
  CHECK_THROWS_AS(four_regular_graphs(4), GraphError);
  CHECK_THROWS_AS(four_regular_graphs(14), GraphError);
}

TEST_CASE("order-8 census row") {
  const CensusRow row = census(8, CensusClass::eulerian);
  CHECK(row.total == 184);
  CHECK(row.histogram == std::vector<int>{177, 6, 1, 0});
  CHECK(row.unresolved == 0);
  CHECK(census_csv_header(4) == "order,total,1,2,3,4,unresolved");
  CHECK(census_csv_line(row) == "8,184,177,6,1,0,0");
}

TEST_CASE("order-8 doubly eulerian 4-regular graphs are the figure graphs") {
  std::vector<Graph> doubly;
  std::vector<Graph> single;
  for (const Graph& g : four_regular_graphs(8)) (graph_index(g).av >= 2 ? doubly : single).push_back(g);
  REQUIRE(doubly.size() == 5);
  REQUIRE(single.size() == 1);
  std::set<std::string> found;
  for (const Graph& g : doubly) found.insert(canonical(g).bytes);
  std::set<std::string> figures;
  for (const char* key : {"fig1a", "fig1b", "fig1c", "fig1d", "fig1e"}) {
    figures.insert(canonical(figure_graph(key)).bytes);
  }
  CHECK(found == figures);
  CHECK(isomorphic(single.front(), figure_graph("fig2_cube_complement")));
}

TEST_CASE("checkpoint resume") {
  const std::string path = (std::filesystem::temp_directory_path() / "avoid_census_test.log").string();
  std::filesystem::remove(path);
  CensusOptions o;
  o.checkpoint = path;
  const CensusRow first = census(7, CensusClass::eulerian, o);
  std::ifstream in(path);
  int lines = 0;
  std::string g6;
  std::string value;
  while (in >> g6 >> value) {
    ++lines;
    CHECK_NOTHROW(graph6_decode(g6));
  }
  CHECK(lines == 37);
  // A planted value is reused, which shows the log is replayed.
  {
    std::ofstream rewrite(path, std::ios::trunc);
    for (const Graph& g : eulerian_graphs(7)) rewrite << graph6_encode(g) << " 3\n";
  }
  const CensusRow replay = census(7, CensusClass::eulerian, o);
  CHECK(replay.histogram[2] == 37);
  CHECK(first.histogram == std::vector<int>{37, 0, 0, 0});
  std::filesystem::remove(path);
}

TEST_CASE("budget exhaustion leaves unresolved entries") {
  CensusOptions o;
  o.search.node_budget = 1;
  o.search.restart_nodes = 0;
  const CensusRow row = census(8, CensusClass::eulerian, o);
  int sum = row.unresolved;
  for (int x : row.histogram) sum += x;
  CHECK(sum == row.total);
  CHECK(row.unresolved > 0);
}

TEST_CASE("saturated scans") {
  const std::vector<int> g13{1, 3};
  const auto v = saturated_scan(g13, 10, 13);
  REQUIRE(v.size() == 4);
  CHECK(v[0].saturated);
  CHECK_FALSE(v[1].saturated);
  CHECK(v[2].saturated);
  CHECK(v[3].saturated);
  CHECK_FALSE(bipartition(circulant(13, g13)).has_value());
  const std::vector<int> g23{2, 3};
  const auto w = saturated_scan(g23, 13, 13);
  REQUIRE(w.size() == 1);
  CHECK_FALSE(w[0].saturated);
  CHECK(w[0].resolved);
}

TEST_CASE("6-regular graphs of order 9") {
  // Removing cycles of equal lengths gives index 2, unequal lengths 1.
  const std::vector<std::pair<std::vector<int>, int>> cases = {
      {{9}, 2}, {{6, 3}, 1}, {{5, 4}, 1}, {{3, 3, 3}, 2}};
  for (const auto& [lengths, av] : cases) {
    const Graph g = complement(disjoint_cycles(lengths));
    REQUIRE(g.min_degree() == 6);
    const IndexResult r = graph_index(g);
    CHECK(r.resolved);
    CHECK(r.av == av);
  }
}
