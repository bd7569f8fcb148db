#include <benchmark/benchmark.h>

#include "gt/adaptive.hpp"
#include "gt/hypergraph.hpp"

using namespace gt;

namespace {

Bitset random_oracle(int n, int d, Rng& rng) {
  std::vector<int> pool(n);
  for (int i = 0; i < n; ++i) pool[i] = i + 1;
  rng.shuffle(pool);
  Bitset b(n);
  for (int i = 0; i < d; ++i) b.set(pool[i]);
  return b;
}

}  // namespace

static void BM_HalvingSession(benchmark::State& state) {
  int n = (int)state.range(0), d = (int)state.range(1);
  Rng rng(3);
  for (auto _ : state) {
    HalvingModel3Strategy strategy(n, d);
    try {
      auto t = run_session(strategy, random_oracle(n, d, rng), n, d);
      benchmark::DoNotOptimize(t.steps.size());
    } catch (const InsufficientNoPool&) {
    }
  }
}
BENCHMARK(BM_HalvingSession)->Args({200, 2})->Args({500, 3});

static void BM_HalvingVerifyModel3(benchmark::State& state) {
  int n = (int)state.range(0), d = (int)state.range(1);
  Rng rng(5);
  Transcript t;
  while (true) {
    HalvingModel3Strategy strategy(n, d);
    try {
      t = run_session(strategy, random_oracle(n, d, rng), n, d);
      break;
    } catch (const InsufficientNoPool&) {
    }
  }
  for (auto _ : state) benchmark::DoNotOptimize(verify_transcript(t, ModelTag::model3).solves);
}
BENCHMARK(BM_HalvingVerifyModel3)->Args({200, 2})->Args({500, 3})->Unit(benchmark::kMillisecond);

static void BM_GirthConstruction40(benchmark::State& state) {
  std::uint64_t seed = 0;
  for (auto _ : state) {
    auto res = construct_girth_hypergraph(40, 4, 2, 5, ++seed);
    benchmark::DoNotOptimize(res.hypergraph.has_value());
  }
}
BENCHMARK(BM_GirthConstruction40)->Unit(benchmark::kMillisecond);

static void BM_BergeGirth(benchmark::State& state) {
  auto res = construct_girth_hypergraph(60, 3, 3, 5, 2);
  for (auto _ : state) benchmark::DoNotOptimize(berge_girth(*res.hypergraph));
}
BENCHMARK(BM_BergeGirth);

BENCHMARK_MAIN();
