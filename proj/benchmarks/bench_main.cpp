#include <benchmark/benchmark.h>

#include <random>

#include "gbtc/automaton.hpp"
#include "gbtc/bounds.hpp"
#include "gbtc/cubical.hpp"
#include "gbtc/graph_io.hpp"
#include "gbtc/local_graph.hpp"
#include "gbtc/local_lemmas.hpp"
#include "gbtc/verification.hpp"

using namespace gbtc;

namespace {

Graph corpus(const char* name) { return load_graph(std::string(GBTC_CORPUS_DIR) + "/" + name + ".json"); }

void BM_DisjointCommutators(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  auto h0 = commutator_subgroup(n, 0);
  auto h1 = commutator_subgroup(n, 1);
  for (auto _ : state) benchmark::DoNotOptimize(disjoint_conjugates(h0, h1, n - 1));
}
BENCHMARK(BM_DisjointCommutators)->DenseRange(4, 8);

void BM_BruteForceCommutators(benchmark::State& state) {
  auto h0 = commutator_subgroup(4, 0);
  auto h1 = commutator_subgroup(4, 1);
  int len = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(disjoint_conjugates_bruteforce(h0, h1, 3, len));
}
BENCHMARK(BM_BruteForceCommutators)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_KernelSweep(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(kernel_sweep(1, 50, 0));
}
BENCHMARK(BM_KernelSweep)->Unit(benchmark::kMillisecond);

void BM_BuildLambda(benchmark::State& state) {
  auto pi = EquivRelation::discrete(4);
  int k = static_cast<int>(state.range(0));
  for (auto _ : state) {
    LambdaGraph lambda = build_lambda(pi, k);
    benchmark::DoNotOptimize(free_basis(lambda, 0).rank());
  }
}
BENCHMARK(BM_BuildLambda)->DenseRange(2, 8, 2);

void BM_ConfigurationBetti(benchmark::State& state) {
  Graph theta = corpus("theta");
  int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(configuration_betti(theta, k));
}
BENCHMARK(BM_ConfigurationBetti)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_SparseRank(benchmark::State& state) {
  std::mt19937_64 rng(3);
  auto n = static_cast<std::size_t>(state.range(0));
  SparseIntMatrix m(n, n);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  for (std::size_t r = 0; r < n; ++r)
    for (int i = 0; i < 4; ++i) m.add(r, pick(rng), i % 2 ? 1 : -1);
  for (auto _ : state) benchmark::DoNotOptimize(rational_rank(m));
}
BENCHMARK(BM_SparseRank)->RangeMultiplier(4)->Range(64, 1024)->Unit(benchmark::kMillisecond);

void BM_BoundReport(benchmark::State& state) {
  Graph g = corpus("fixed10");
  for (auto _ : state) benchmark::DoNotOptimize(bound_report(g, 4, 12));
}
BENCHMARK(BM_BoundReport);

}  // namespace
BENCHMARK_MAIN();
