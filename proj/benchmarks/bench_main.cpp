#include <benchmark/benchmark.h>

#include <random>

#include "matchlab/audit.hpp"
#include "matchlab/compression.hpp"
#include "matchlab/extremal.hpp"
#include "matchlab/matching.hpp"
#include "matchlab/search.hpp"
#include "matchlab/trace.hpp"

using namespace matchlab;

static void BM_MatchingNumberComplete(benchmark::State& state) {
  Family f = Family::complete(static_cast<int>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(matching_number(f).size);
  state.SetLabel(std::to_string(f.size()) + " edges");
}
BENCHMARK(BM_MatchingNumberComplete)->Arg(9)->Arg(12)->Arg(13);

static void BM_IsMaximalA1(benchmark::State& state) {
  Family f = build_A({static_cast<int>(state.range(0)), 3, 3, 1});
  for (auto _ : state) benchmark::DoNotOptimize(is_maximal(f, 3));
}
BENCHMARK(BM_IsMaximalA1)->Arg(12)->Arg(13);

static void BM_Stabilize(benchmark::State& state) {
  std::mt19937 rng(1);
  auto all = subsets_of_size(VertexSet::interval(1, 12), 3);
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(60);
  Family f(12, all, 3);
  for (auto _ : state) benchmark::DoNotOptimize(stabilize(f).family.size());
}
BENCHMARK(BM_Stabilize);

static void BM_CountingLemma(benchmark::State& state) {
  Family f = build_A({17, 3, 4, 2});
  for (auto _ : state) benchmark::DoNotOptimize(counting_lemma_check(f, 3, 4).equal);
}
BENCHMARK(BM_CountingLemma)->Unit(benchmark::kMillisecond);

static void BM_RandomSaturatedStable(benchmark::State& state) {
  std::mt19937_64 rng(5);
  for (auto _ : state) benchmark::DoNotOptimize(random_saturated_stable(13, 3, 3, rng).size());
}
BENCHMARK(BM_RandomSaturatedStable)->Unit(benchmark::kMillisecond);

static void BM_MaxStable(benchmark::State& state) {
  SearchOptions o;
  o.threads = 1;
  const int n = static_cast<int>(state.range(0));
  const int k = static_cast<int>(state.range(1));
  const int s = static_cast<int>(state.range(2));
  std::int64_t nodes = 0;
  for (auto _ : state) {
    auto r = max_stable(n, k, s, o);
    nodes = r.nodes_explored;
    benchmark::DoNotOptimize(r.max_size);
  }
  state.counters["nodes"] = static_cast<double>(nodes);
}
BENCHMARK(BM_MaxStable)
    ->Args({9, 3, 2})
    ->Args({10, 3, 2})
    ->Args({11, 3, 2})
    ->Args({9, 2, 3})
    ->Unit(benchmark::kMillisecond);

static void BM_AuditCatalog(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(audit_catalog(3, 200, PivotMode::N0).size());
}
BENCHMARK(BM_AuditCatalog)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
