#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "gsatlas/canonical.hpp"
#include "gsatlas/enumerate.hpp"
#include "gsatlas/invariants.hpp"
#include "gsatlas/lc_orbit.hpp"

using namespace gsatlas;

namespace {

std::vector<Graph> random_graphs(int n, size_t count, uint32_t seed) {
  std::mt19937 rng(seed);
  std::vector<Graph> out;
  while (out.size() < count) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (rng() & 1u) g.add_edge(i, j);
    if (is_connected(g)) out.push_back(g);
  }
  return out;
}

}  // namespace

static void BM_CanonicalForm(benchmark::State& state) {
  std::vector<Graph> graphs = random_graphs(static_cast<int>(state.range(0)), 256, 99);
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(canonical_form(graphs[i++ & 255]));
  }
}
BENCHMARK(BM_CanonicalForm)->Arg(6)->Arg(8)->Arg(10);

static void BM_CanonicalFormRegular(benchmark::State& state) {
  Graph worst = cycle_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(canonical_form(worst));
  }
}
BENCHMARK(BM_CanonicalFormRegular)->Arg(8)->Arg(10);

static void BM_EnumerateConnected(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_connected_forms(static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_EnumerateConnected)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

static void BM_LcOrbit(benchmark::State& state) {
  Graph c8 = cycle_graph(8);
  for (auto _ : state) {
    benchmark::DoNotOptimize(lc_orbit(c8));
  }
}
BENCHMARK(BM_LcOrbit)->Unit(benchmark::kMillisecond);

static void BM_RankIndexes(benchmark::State& state) {
  std::vector<Graph> graphs = random_graphs(8, 64, 7);
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(rank_indexes(graphs[i++ & 63]));
  }
}
BENCHMARK(BM_RankIndexes);

static void BM_PauliPersistency(benchmark::State& state) {
  Graph c8 = cycle_graph(8);
  for (auto _ : state) {
    PersistencyCache cache;  // cold cache each round
    benchmark::DoNotOptimize(pauli_persistency(c8, cache));
  }
}
BENCHMARK(BM_PauliPersistency)->Unit(benchmark::kMillisecond);

static void BM_MinVertexCover(benchmark::State& state) {
  std::vector<Graph> graphs = random_graphs(8, 64, 13);
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(min_vertex_cover(graphs[i++ & 63]));
  }
}
BENCHMARK(BM_MinVertexCover);

BENCHMARK_MAIN();
