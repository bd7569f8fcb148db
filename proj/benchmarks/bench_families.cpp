#include <benchmark/benchmark.h>

#include "gt/family_ops.hpp"
#include "gt/generators.hpp"
#include "gt/models.hpp"
#include "gt/separation.hpp"

using namespace gt;

static void BM_EnumerateFamilies(benchmark::State& state) {
  for (auto _ : state) {
    FamilyEnumerator stream(4, 4);
    std::uint64_t count = 0;
    while (auto f = stream.next()) count += f->size();
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_EnumerateFamilies);

static void BM_Model1EquivalenceSweep(benchmark::State& state) {
  for (auto _ : state) {
    FamilyEnumerator stream(4, 4);
    std::uint64_t agree = 0;
    while (auto f = stream.next()) {
      bool semantic = solves_model1_semantic(*f, 2).solves;
      bool dual = model1_characterization(*f, 2).holds;
      agree += semantic == dual;
    }
    benchmark::DoNotOptimize(agree);
  }
}
BENCHMARK(BM_Model1EquivalenceSweep)->Unit(benchmark::kMillisecond);

static void BM_DSeparating(benchmark::State& state) {
  auto f = random_family((int)state.range(0), 20, 0.3, 7);
  for (auto _ : state) benchmark::DoNotOptimize(is_d_separating(f, 2).holds);
}
BENCHMARK(BM_DSeparating)->Arg(16)->Arg(32)->Arg(40);

static void BM_CoveringNumber(benchmark::State& state) {
  auto h = random_family(24, (int)state.range(0), 0.25, 11);
  for (auto _ : state) benchmark::DoNotOptimize(covering_number(h));
}
BENCHMARK(BM_CoveringNumber)->Arg(8)->Arg(12);

BENCHMARK_MAIN();
