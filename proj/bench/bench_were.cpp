#include "pseudoknot/verify.hpp"
#include "pseudoknot/wereset.hpp"

#include <benchmark/benchmark.h>

using namespace pk;

namespace {

const char* const kShadows[] = {"(i^3)(i^2)", "(i^2)(i)(i)(i^2)", "(i^4)(i^3)(i^3)"};

PseudoDiagram shadow(int which) {
  if (which == 3)
    return build(torus3_shadow(4));
  return build(kShadows[which]);
}

void BM_WereSerial(benchmark::State& state) {
  PseudoDiagram d = shadow(static_cast<int>(state.range(0)));
  const KnotTable& table = KnotTable::bundled();
  for (auto _ : state)
    benchmark::DoNotOptimize(were_serial(d, true, table));
  state.SetLabel(std::to_string(d.pre_count()) + " precrossings");
}

void BM_WereParallel(benchmark::State& state) {
  PseudoDiagram d = shadow(static_cast<int>(state.range(0)));
  const KnotTable& table = KnotTable::bundled();
  for (auto _ : state)
    benchmark::DoNotOptimize(were(d, true, table, static_cast<int>(state.range(1))));
  state.SetLabel(std::to_string(d.pre_count()) + " precrossings");
}

} // namespace

BENCHMARK(BM_WereSerial)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_WereParallel)->ArgsProduct({{0, 1, 2, 3}, {1, 2, 4, 8}})->UseRealTime()->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
