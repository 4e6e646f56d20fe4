#include <benchmark/benchmark.h>

#include <vector>

#include "avoid/families.hpp"
#include "avoid/search.hpp"

using namespace avoid;

namespace {

void BM_IndexKStar(benchmark::State& state) {
  const Graph g = kstar(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(graph_index(g).av);
}
BENCHMARK(BM_IndexKStar)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_IndexCirculant13(benchmark::State& state) {
  const Graph g = circulant(13, std::vector<int>{1, 3});
  for (auto _ : state) benchmark::DoNotOptimize(graph_index(g).av);
}
BENCHMARK(BM_IndexCirculant13)->Unit(benchmark::kMillisecond);

// A start with no pair: the refutation is the expensive direction.
void BM_RefuteCubeComplement(benchmark::State& state) {
  const Graph g = figure_graph("fig2_cube_complement");
  for (auto _ : state) benchmark::DoNotOptimize(exists_k(g, 0, 2).status);
}
BENCHMARK(BM_RefuteCubeComplement)->Unit(benchmark::kMillisecond);

void BM_ExistsGamma(benchmark::State& state) {
  const Graph g = gamma_graph(0, 2, 4, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(exists_k(g, 0, 2).status);
}
BENCHMARK(BM_ExistsGamma)->Arg(4)->Arg(6)->Unit(benchmark::kMicrosecond);

void BM_Oracle(benchmark::State& state) {
  const Graph g = gamma_graph(0, 2, 2, 2);
  for (auto _ : state) benchmark::DoNotOptimize(oracle_av_vertex(g, 0));
}
BENCHMARK(BM_Oracle)->Unit(benchmark::kMillisecond);

}  // namespace
