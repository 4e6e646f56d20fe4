#include <benchmark/benchmark.h>

#include <vector>

#include "avoid/canonical.hpp"
#include "avoid/census.hpp"
#include "avoid/circuit.hpp"
#include "avoid/constructions.hpp"
#include "avoid/families.hpp"

using namespace avoid;

namespace {

void BM_CanonicalCirculant(benchmark::State& state) {
  const Graph g = circulant(static_cast<int>(state.range(0)), std::vector<int>{1, 3});
  for (auto _ : state) benchmark::DoNotOptimize(canonical(g).bytes);
}
BENCHMARK(BM_CanonicalCirculant)->Arg(12)->Arg(24)->Arg(48);

void BM_CanonicalKStar(benchmark::State& state) {
  const Graph g = kstar(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(canonical(g).bytes);
}
BENCHMARK(BM_CanonicalKStar)->Arg(5)->Arg(9);

void BM_EnumerateEulerian(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(eulerian_graphs(n).size());
}
BENCHMARK(BM_EnumerateEulerian)->DenseRange(6, 8)->Unit(benchmark::kMillisecond);

void BM_Enumerate4Regular(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(four_regular_graphs(n).size());
}
BENCHMARK(BM_Enumerate4Regular)->DenseRange(9, 11)->Unit(benchmark::kMillisecond);

void BM_Hierholzer(benchmark::State& state) {
  const Graph g = complete_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(hierholzer(g, 0).seq.size());
}
BENCHMARK(BM_Hierholzer)->Arg(11)->Arg(31)->Arg(63);

void BM_ConstructOddMax(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(construct_odd_max(n).certificates.size());
}
BENCHMARK(BM_ConstructOddMax)->Arg(23)->Arg(41)->Unit(benchmark::kMillisecond);

void BM_ConstructSquare(benchmark::State& state) {
  const int s = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(construct_square_family(s).certificates.size());
}
BENCHMARK(BM_ConstructSquare)->DenseRange(2, 6)->Unit(benchmark::kMillisecond);

}  // namespace
