#include <benchmark/benchmark.h>

#include "ringlab/expr.hpp"
#include "ringlab/ideals.hpp"
#include "ringlab/predicates.hpp"
#include "ringlab/suite.hpp"

using namespace ringlab;

namespace {

const char* const kRings[] = {"Zn(8)", "M(2,Zn(2))", "T(2,Zn(4))", "M(2,Zn(3))", "Hst(Zn(4),s=1,t=3)",
                              "M(2,Zn(4))"};

void BM_Validate(benchmark::State& state) {
  const auto expr = kRings[state.range(0)];
  const RingTables tables = build_ring(expr).tables();
  for (auto _ : state) benchmark::DoNotOptimize(validate_ring(tables));
  state.SetLabel(expr);
}
BENCHMARK(BM_Validate)->DenseRange(0, 5);

void BM_Lattice(benchmark::State& state) {
  const auto expr = kRings[state.range(0)];
  const FiniteRing r = build_ring(expr);
  for (auto _ : state) benchmark::DoNotOptimize(all_right_ideals(r));
  state.SetLabel(expr);
}
BENCHMARK(BM_Lattice)->DenseRange(0, 5)->Unit(benchmark::kMicrosecond);

// Fresh analysis each time: lattice, J, socle, delta from scratch.
void BM_Delta(benchmark::State& state) {
  const auto expr = kRings[state.range(0)];
  const FiniteRing r = build_ring(expr);
  for (auto _ : state) {
    RingAnalysis an(r);
    benchmark::DoNotOptimize(an.delta());
  }
  state.SetLabel(expr);
}
BENCHMARK(BM_Delta)->DenseRange(0, 5)->Unit(benchmark::kMicrosecond);

void BM_DeltaReversible(benchmark::State& state) {
  const FiniteRing r = build_ring("M(2,Zn(3))");
  for (auto _ : state) {
    RingAnalysis an(r);
    benchmark::DoNotOptimize(is_delta_reversible(an));
  }
}
BENCHMARK(BM_DeltaReversible)->Unit(benchmark::kMicrosecond);

void BM_QuickSuite(benchmark::State& state) {
  const Corpus corpus = build_corpus("quick");
  for (auto _ : state) benchmark::DoNotOptimize(run_theorem_suite(corpus, 1));
}
BENCHMARK(BM_QuickSuite)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
