#include <doctest.h>

#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include "avoid/canonical.hpp"
#include "avoid/constructions.hpp"
#include "avoid/families.hpp"
#include "avoid/search.hpp"

using namespace avoid;

namespace {

bool sound(const Construction& c) {
  for (const AvoidanceCertificate& cert : c.certificates) {
    if (certificate_problem(c.graph, cert)) return false;
    for (const Circuit& circuit : cert.circuits) {
      if (!validate_circuit(c.graph, circuit, cert.start)) return false;
    }
    if (!mutually_avoiding(c.graph, cert.circuits)) return false;
  }
  return !c.certificates.empty();
}

std::vector<EdgeGrid> reference_grids() {
  std::ifstream in(AVOID_TEST_DATA "/grids.txt");
  REQUIRE(in.good());
  std::vector<EdgeGrid> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind("grid", 0) != 0) continue;
    std::istringstream head(line);
    std::string word;
    int rows = 0;
    int cols = 0;
    head >> word >> rows >> cols;
    EdgeGrid g(static_cast<std::size_t>(rows), std::vector<int>(static_cast<std::size_t>(cols)));
    for (auto& row : g) {
      for (int& x : row) in >> x;
    }
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace

TEST_CASE("complete graph minus triangles") {
  for (int n : {9, 15, 21}) {
    const Construction c = construct_3mod6(n);
    CHECK(sound(c));
    CHECK(c.graph == kn_minus_triangles(n));
    CHECK(c.certificates.front().k() == 2);
  }
  CHECK_THROWS_AS(construct_3mod6(8), ConstructionError);
  CHECK_THROWS_AS(construct_3mod6(3), ConstructionError);
}

TEST_CASE("odd circulants of degree n-3") {
  const Construction c13 = construct_odd_max(13);
  CHECK(sound(c13));
  CHECK(c13.graph == circulant(13, std::vector<int>{2, 3, 4, 5, 6}));
  for (int n = 9; n <= 29; n += 2) {
    const Construction c = construct_odd_max(n);
    CHECK(sound(c));
    CHECK(c.graph.min_degree() == n - 3);
  }
  CHECK_THROWS_AS(construct_odd_max(10), ConstructionError);
  CHECK_THROWS_AS(construct_odd_max(7), ConstructionError);
}

TEST_CASE("block scheme") {
  const BlockScheme b23 = block_scheme(23);
  CHECK(b23.f == 10);
  CHECK(b23.c.size() == 10);
  std::set<int> values(b23.c.begin(), b23.c.end());
  CHECK(values == std::set<int>{1, 2, 3, 4, 5, 6, 7, 8, 9, 10});
  for (int n = 23; n <= 59; n += 2) {
    const BlockScheme s = block_scheme(n);
    long sum = 0;
    for (int x : s.b) sum += x;
    CHECK(((sum % n) + n) % n == 1);
    const auto blocks = odd_max_blocks(s);
    CHECK(blocks[0].size() == static_cast<std::size_t>(n));
    CHECK(blocks[1].size() == static_cast<std::size_t>(n));
  }
  for (int n : {23, 25, 27}) CHECK(odd_max_trace(construct_odd_max(n)) == odd_max_expected_trace(n));
  CHECK_THROWS_AS(block_scheme(21), ConstructionError);
}

TEST_CASE("complete multipartite") {
  for (int n : {8, 12, 16}) {
    const Construction c = construct_0mod4_max(n);
    CHECK(sound(c));
    CHECK(c.graph.min_degree() == n - 4);
  }
  CHECK(construct_0mod4_max(8).graph == complete_bipartite(4, 4));
  CHECK_THROWS_AS(construct_0mod4_max(10), ConstructionError);

  const Construction k444 = extend_multipartite(construct_0mod4_max(8), 4);
  CHECK(sound(k444));
  CHECK(isomorphic(k444.graph, complete_multipartite(std::vector<int>{4, 4, 4})));
  const Construction k4444 = extend_multipartite(k444, 4);
  CHECK(sound(k4444));
  CHECK(k4444.graph.order() == 16);

  const Construction k666 = extend_multipartite(construct_square_family(3), 6);
  CHECK(sound(k666));
  CHECK(k666.certificates.front().k() == 5);
  CHECK(isomorphic(k666.graph, complete_multipartite(std::vector<int>{6, 6, 6})));
}

TEST_CASE("two mod four") {
  const Construction c10 = construct_2mod4_max(10);
  CHECK(sound(c10));
  CHECK(c10.from(0).k() == 2);
  CHECK(c10.from(4).k() == 2);
  for (int n : {14, 18}) {
    const Construction c = construct_2mod4_max(n);
    CHECK(sound(c));
    CHECK(c.certificates.size() == 2);
    CHECK(c.graph.min_degree() == n - 4);
  }
  CHECK_THROWS_AS(construct_2mod4_max(12), ConstructionError);
}

TEST_CASE("doubling") {
  const Construction base = archive_entry("doubling_base_n9");
  const Doubling d = double_complete_minus_cycle(4, base.certificates.front());
  const Construction stored = archive_entry("doubled_n18");
  CHECK(sound(d.result));
  CHECK(d.result.graph == stored.graph);
  CHECK(d.result.certificates.front().circuits == stored.certificates.front().circuits);
  CHECK(d.result.graph.min_degree() == 14);
  REQUIRE(d.offsets.size() == 1);
  CHECK(d.offsets.front() == 8);

  const Graph z13 = circulant(13, std::vector<int>{1, 3});
  const ExistsResult r = exists_k(z13, 0, 4);
  REQUIRE(r.status == SearchStatus::found);
  const Doubling big = double_circulant(13, {1, 3}, *r.certificate);
  CHECK(sound(big.result));
  CHECK(big.result.graph.order() == 26);
  CHECK(big.result.certificates.front().k() == 4);

  // Stored hosts at orders 9, 11 and 15 use the generators 1..f.
  for (int n : {9, 11, 15}) {
    std::vector<int> gens;
    for (int i = 1; i <= (n - 3) / 2; ++i) gens.push_back(i);
    const Construction c = construct_odd_max(n);
    REQUIRE(c.graph == circulant(n, gens));
    const Doubling dd = double_circulant(n, gens, c.certificates.front());
    CHECK(sound(dd.result));
    REQUIRE(dd.offsets.size() == 1);
    CHECK(dd.offsets.front() == (n + 1) / 2);
  }

  AvoidanceCertificate unverified = base.certificates.front();
  unverified.verified = false;
  CHECK_THROWS_AS(double_complete_minus_cycle(4, unverified), ConstructionError);
  for (const char* key : {"doubled_n10", "doubled_n14"}) CHECK(sound(archive_entry(key)));
}

TEST_CASE("bipartite pairs") {
  const Graph k46 = complete_bipartite(4, 6);
  for (Vertex v = 0; v < k46.order(); ++v) CHECK(sound(construct_bipartite_pair(k46, v)));
  const Graph k55 = kstar(5);
  for (Vertex v = 0; v < k55.order(); ++v) CHECK(sound(construct_bipartite_pair(k55, v)));
  CHECK_THROWS_AS(construct_bipartite_pair(complete_bipartite(2, 4), 0), ConstructionError);
  CHECK_THROWS_AS(construct_bipartite_pair(cycle_graph(5), 0), ConstructionError);
}

TEST_CASE("square and rectangle families") {
  const std::vector<EdgeGrid> reference = reference_grids();
  REQUIRE(reference.size() == 12);
  const std::vector<EdgeGrid> squares = derived_grids(zigzag_grid(6, 6), 5);
  for (int i = 0; i < 5; ++i) CHECK(squares[i] == reference[i]);
  const std::vector<EdgeGrid> wide = derived_grids(zigzag_grid(4, 6), 3);
  for (int i = 0; i < 3; ++i) CHECK(wide[i] == reference[5 + i]);
  const std::vector<EdgeGrid> tall = derived_grids(zigzag_grid(6, 4), 4);
  for (int i = 0; i < 4; ++i) CHECK(tall[i] == reference[8 + i]);

  for (int s = 2; s <= 6; ++s) {
    const Construction c = construct_square_family(s);
    CHECK(sound(c));
    CHECK(c.certificates.front().k() == 2 * s - 1);
  }
  const Construction r12 = construct_rectangle_family(1, 2);
  CHECK(r12.from(0).k() == 1);
  CHECK(r12.from(2).k() == 2);
  for (auto [r, s] : {std::pair{2, 3}, {3, 5}, {2, 5}}) {
    const Construction c = construct_rectangle_family(r, s);
    CHECK(sound(c));
    CHECK(c.from(0).k() == 2 * r - 1);
    CHECK(c.from(2 * r).k() == 2 * r);
  }
  CHECK_THROWS_AS(construct_square_family(1), ConstructionError);
  CHECK_THROWS_AS(construct_rectangle_family(3, 3), ConstructionError);
}

TEST_CASE("square invariants") {
  for (int s = 2; s <= 5; ++s) {
    const int side = 2 * s;
    const std::vector<EdgeGrid> grids = derived_grids(zigzag_grid(side, side), 2 * s - 1);
    for (const EdgeGrid& g : grids) {
      std::vector<std::pair<int, int>> where(static_cast<std::size_t>(side * side + 1));
      for (int i = 0; i < side; ++i) {
        for (int j = 0; j < side; ++j) where[g[i][j]] = {i, j};
      }
      CHECK(where[1].first == 0);
      CHECK(where[side * side].first == 0);
      for (int x = 2; x <= side * side; ++x) {
        const bool same_col = where[x].second == where[x - 1].second;
        const bool same_row = where[x].first == where[x - 1].first;
        CHECK(same_col == (x % 2 == 0));
        CHECK(same_row == (x % 2 == 1));
      }
    }
    for (int x = 2; x < side * side; ++x) {
      std::set<int> rows;
      std::set<int> cols;
      for (const EdgeGrid& g : grids) {
        for (int i = 0; i < side; ++i) {
          for (int j = 0; j < side; ++j) {
            if (g[i][j] == x) {
              rows.insert(i);
              cols.insert(j);
            }
          }
        }
      }
      CHECK(rows.size() == grids.size());
      CHECK(cols.size() == grids.size());
    }
  }
}

TEST_CASE("gamma constructions") {
  const Graph g0222 = gamma_graph(0, 2, 2, 2);
  CHECK(certify(g0222, 0, construct_gamma_a0(2, 2, 2, 0).circuits).verified);
  for (auto [b, c, d] : {std::array{2, 2, 4}, {2, 4, 4}, {2, 2, 6}, {4, 4, 4}, {2, 4, 6}}) {
    const Graph g = gamma_graph(0, b, c, d);
    for (Vertex v = 0; v < g.order(); ++v) {
      const AvoidanceCertificate cert = construct_gamma_a0(b, c, d, v);
      CHECK(cert.verified);
      CHECK_FALSE(certificate_problem(g, cert).has_value());
    }
  }
  CHECK_THROWS_AS(construct_gamma_a0(2, 3, 4, 0), ConstructionError);
  CHECK_THROWS_AS(construct_gamma_a0(2, 2, 8, 0), ConstructionError);
  for (int c : {4, 5, 6, 7}) {
    const Graph g = gamma_graph(1, 4, c, c);
    for (Vertex v = 0; v < g.order(); ++v) {
      const AvoidanceCertificate cert = construct_gamma_14cc(c, v);
      CHECK_FALSE(certificate_problem(g, cert).has_value());
    }
  }
  CHECK(gamma_graph(1, 4, 4, 4).order() == 15);
  CHECK_THROWS_AS(construct_gamma_14cc(3, 0), ConstructionError);
}

TEST_CASE("4-regular graphs that are not doubly eulerian") {
  for (int n = 11; n <= 16; ++n) {
    const Graph g = construct_4reg_non_doubly(n);
    CHECK(g.order() == n);
    CHECK(g.min_degree() == 4);
    CHECK(g.max_degree() == 4);
    CHECK(is_eulerian(g));
  }
  CHECK(isomorphic(construct_4reg_non_doubly(12), figure_graph("fig8_order12_index1")));
  CHECK(graph_index(construct_4reg_non_doubly(11)).av == 1);
  CHECK_THROWS_AS(construct_4reg_non_doubly(10), ConstructionError);
}

TEST_CASE("archive") {
  const std::vector<std::string> keys = archive_keys();
  CHECK(keys.size() == 14);
  for (const std::string& key : keys) CHECK(sound(archive_entry(key)));
  CHECK(archive_entry("kstar55").certificates.front().k() == 4);
  const Construction k77 = archive_entry("kstar77");
  CHECK(k77.certificates.front().k() == 6);
  CHECK(isomorphic(k77.graph, kstar(7)));
  for (Vertex i = 0; i < 7; ++i) CHECK_FALSE(k77.graph.adjacent(i, i + 7));
  CHECK(archive_entry("odd_max_n17").graph == circulant(17, std::vector<int>{1, 2, 3, 4, 5, 6, 7}));
  CHECK_THROWS_AS(archive_entry("nosuch"), ConstructionError);
}
