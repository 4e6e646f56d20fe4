#include <doctest.h>

#include "avoid/canonical.hpp"
#include "avoid/census.hpp"
#include "avoid/families.hpp"

using namespace avoid;

namespace {

bool regular(const Graph& g, int d) { return g.min_degree() == d && g.max_degree() == d; }

bool has_cut_vertex(const Graph& g) {
  for (Vertex v = 0; v < g.order(); ++v) {
    if (is_cut_vertex(g, v)) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("family members") {
  const Graph g1123 = gamma_graph(1, 1, 2, 3);
  CHECK(g1123.order() == 9);
  CHECK(g1123.size() == 11);
  CHECK(isomorphic(g1123, figure_graph("fig4_gamma1123")));
  for (int a = 0; a <= 2; ++a) {
    for (int b = std::max(a, 1); b <= 3; ++b) {
      for (int d = b; d <= 5; ++d) CHECK(gamma_graph(a, b, b, d).size() == a + b + b + d + 4);
    }
  }
  const Graph k = kstar(5);
  CHECK(k.order() == 10);
  CHECK(k.size() == 20);
  CHECK(regular(k, 4));
  const Graph lambda = lambda_graph(4, 5, 7);
  CHECK(lambda.order() == 19);
  CHECK(edge_excess(lambda) == 3);
  for (Vertex v = 0; v < 19; ++v) CHECK(lambda.adjacent(v, (v + 1) % 19));
  CHECK(isomorphic(lambda, figure_graph("fig9_lambda457")));
  const Graph t9 = kn_minus_triangles(9);
  CHECK(t9.order() == 9);
  CHECK(regular(t9, 6));
  CHECK(regular(kn_minus_ham_cycle(9), 6));
  CHECK(kn_minus_ham_cycle(9) == circulant(9, std::vector<int>{2, 3, 4}));
  CHECK(isomorphic(kstar(5), circulant(10, std::vector<int>{1, 3})));
  CHECK(isomorphic(kstar(7), circulant(14, std::vector<int>{1, 3, 5})));
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(gamma_graph(0, 0, 1, 1), GraphError);
  CHECK_THROWS_AS(gamma_graph(2, 1, 3, 3), GraphError);
  CHECK_THROWS_AS(circulant(10, std::vector<int>{0, 1}), GraphError);
  CHECK_THROWS_AS(circulant(10, std::vector<int>{6}), GraphError);
  CHECK_THROWS_AS(kn_minus_triangles(10), GraphError);
  CHECK_THROWS_AS(lambda_graph(3, 2, 4), GraphError);
}

TEST_CASE("edge excess") {
  CHECK(edge_excess(cycle_graph(7)) == 0);
  CHECK(edge_excess(gamma_graph(0, 2, 4, 6)) == 2);
  CHECK(edge_excess(figure_graph("fig5b_excess4")) == 4);
  CHECK(edge_excess(figure_graph("fig3a_excess1")) == 1);
  CHECK(edge_excess(figure_graph("fig3b_excess2")) == 2);
}

TEST_CASE("figure graphs") {
  const Graph cube = figure_graph("fig2_cube_complement");
  CHECK(cube.order() == 8);
  CHECK(regular(cube, 4));
  CHECK(canonical(cube).orbit_count() == 1);
  const Graph sat = figure_graph("fig7_saturated12");
  CHECK(sat.order() == 12);
  CHECK(regular(sat, 4));
  CHECK(bipartition(sat).has_value());
  CHECK(figure_graph("fig6_saturated12") == sat);
  const Graph cut = figure_graph("fig8_order12_index1");
  CHECK(regular(cut, 4));
  CHECK(has_cut_vertex(cut));
  CHECK(isomorphic(gamma_graph(0, 2, 2, 2), figure_graph("fig5a_gamma0222")));
  for (const std::string& key : figure_keys()) CHECK(figure_graph(key).order() > 0);
  CHECK_THROWS_AS(figure_graph("fig99"), GraphError);
}

TEST_CASE("spec text") {
  for (const char* text : {"cycle(5)", "complete(7)", "kbip(4,6)", "km(4,4,4)", "kstar(7)", "circulant(13;1,3)",
                           "gamma(0,2,2,4)", "lambda(4,5,7)", "kn_minus_ham(9)", "kn_minus_triangles(9)",
                           "complement(cycle(7))"}) {
    const FamilySpec spec = parse_family(text);
    CHECK(spec.to_string() == text);
    CHECK(generate(parse_family(spec.to_string())) == generate(spec));
  }
  CHECK(generate(parse_family("complement(cycle(7))")) == complement(cycle_graph(7)));
  CHECK_THROWS_AS(parse_family("circulant(13,1,3)"), GraphError);
  CHECK_THROWS_AS(parse_family("nosuch(3)"), GraphError);
  CHECK_THROWS_AS(parse_family("cycle(x)"), GraphError);
  CHECK_THROWS_AS(parse_family("cycle(5"), GraphError);
}

TEST_CASE("gamma bipartiteness") {
  for (int b = 1; b <= 9; ++b) {
    for (int c = b; c <= 9; ++c) {
      for (int d = c; d <= 9; ++d) {
        const bool even = b % 2 == 0 && c % 2 == 0 && d % 2 == 0;
        CHECK(bipartition(gamma_graph(0, b, c, d)).has_value() == even);
        for (int a = 1; a <= b; ++a) {
          const Graph g = gamma_graph(a, b, c, d);
          if (g.order() % 2 == 1) CHECK_FALSE(bipartition(g).has_value());
        }
      }
    }
  }
}

TEST_CASE("excess-two graphs match the filtered census") {
  for (int n = 5; n <= 9; ++n) {
    int filtered = 0;
    for (const Graph& g : eulerian_graphs(n)) filtered += edge_excess(g) == 2 ? 1 : 0;
    const std::vector<Graph> built = excess_two_graphs(n);
    CHECK(static_cast<int>(built.size()) == filtered);
    for (const Graph& g : built) {
      CHECK(is_eulerian(g));
      CHECK(edge_excess(g) == 2);
    }
  }
}
