// Parallel enumerate vs the serial reference, over each case at a few depths.

#include <benchmark/benchmark.h>

#include "g2branch/character.hpp"
#include "g2branch/simplicity.hpp"

using namespace g2branch;

namespace {

Weight sample(CaseId id) { return sample_generic(generic_hypothesis(id).name, 1); }

template <Decomposition (*Fn)(CaseId, const Weight&, int)>
void run_enumerate(benchmark::State& state) {
  const auto id = static_cast<CaseId>(state.range(0));
  const int depth = static_cast<int>(state.range(1));
  const Weight lambda = sample(id);
  for (auto _ : state) benchmark::DoNotOptimize(Fn(id, lambda, depth));
  state.SetLabel(std::string(case_name(id)));
}

void BM_EnumerateParallel(benchmark::State& state) { run_enumerate<enumerate>(state); }
void BM_EnumerateSerial(benchmark::State& state) { run_enumerate<enumerate_serial>(state); }

void BM_HomGrid(benchmark::State& state) {
  const auto id = static_cast<CaseId>(state.range(0));
  const Weight lambda = sample(id);
  for (auto _ : state) benchmark::DoNotOptimize(hom_grid(id, lambda, static_cast<int>(state.range(1))));
  state.SetLabel(std::string(case_name(id)));
}

void cases(benchmark::internal::Benchmark* b) {
  for (int id = 0; id < 6; ++id) {
    for (int depth : {12, 40, 120}) b->Args({id, depth});
  }
}

}  // namespace

BENCHMARK(BM_EnumerateParallel)->Apply(cases)->UseRealTime();
BENCHMARK(BM_EnumerateSerial)->Apply(cases)->UseRealTime();
BENCHMARK(BM_HomGrid)->Args({0, 12})->Args({2, 12})->Args({5, 12});

BENCHMARK_MAIN();
