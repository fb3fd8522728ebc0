// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "nilclean/classify.hpp"
#include "nilclean/constructors.hpp"
#include "nilclean/kernels.hpp"

namespace {

using namespace nilclean;

const char* const kRings[] = {"Z64", "T2(Z4)", "MZ(4,4,2)", "Z1024", "T2(Z8)"};

RingPtr ring_arg(const benchmark::State& state) { return build_ring(kRings[state.range(0)]); }

template <class Kernel>
void run(benchmark::State& state, Kernel kernel) {
  const auto r = ring_arg(state);
  state.SetLabel(r->spec());
  for (auto _ : state) benchmark::DoNotOptimize(kernel(*r));
  state.SetItemsProcessed(state.iterations() * std::int64_t{r->order()});
}

void BM_UnitsSerial(benchmark::State& s) { run(s, kernels::serial::unit_flags); }
void BM_UnitsParallel(benchmark::State& s) { run(s, kernels::parallel::unit_flags); }
void BM_NilSerial(benchmark::State& s) { run(s, kernels::serial::nil_indices); }
void BM_NilParallel(benchmark::State& s) { run(s, kernels::parallel::nil_indices); }
void BM_CenterSerial(benchmark::State& s) { run(s, kernels::serial::center_flags); }
void BM_CenterParallel(benchmark::State& s) { run(s, kernels::parallel::center_flags); }

void BM_JacobsonSerial(benchmark::State& s) {
  run(s, [](const FiniteRing& r) { return kernels::serial::jacobson_flags(r, units(r)); });
}
void BM_JacobsonParallel(benchmark::State& s) {
  run(s, [](const FiniteRing& r) { return kernels::parallel::jacobson_flags(r, units(r)); });
}

template <bool Parallel>
void BM_Decompositions(benchmark::State& state) {
  const auto r = ring_arg(state);
  const auto elems = ElementSet::all(r->order()).members();
  const auto idems = idempotents(*r).members();
  const kernels::DecompositionQuery q{elems, idems, &nilpotents(*r), false};
  state.SetLabel(r->spec());
  for (auto _ : state) {
    benchmark::DoNotOptimize(Parallel ? kernels::parallel::decomposition_counts(*r, q)
                                      : kernels::serial::decomposition_counts(*r, q));
  }
}

template <bool Parallel>
void BM_Axioms(benchmark::State& state) {
  const auto r = build_ring(state.range(0) == 0 ? "Z64" : "T2(Z4)");
  state.SetLabel(r->spec());
  for (auto _ : state) {
    benchmark::DoNotOptimize(Parallel ? kernels::parallel::exhaustive_axioms(*r)
                                      : kernels::serial::exhaustive_axioms(*r));
  }
}

}  // namespace

#define RING_ARGS DenseRange(0, 4)->Unit(benchmark::kMicrosecond)
BENCHMARK(BM_UnitsSerial)->RING_ARGS;
BENCHMARK(BM_UnitsParallel)->RING_ARGS;
BENCHMARK(BM_NilSerial)->RING_ARGS;
BENCHMARK(BM_NilParallel)->RING_ARGS;
BENCHMARK(BM_CenterSerial)->RING_ARGS;
BENCHMARK(BM_CenterParallel)->RING_ARGS;
BENCHMARK(BM_JacobsonSerial)->RING_ARGS;
BENCHMARK(BM_JacobsonParallel)->RING_ARGS;
BENCHMARK_TEMPLATE(BM_Decompositions, false)->RING_ARGS;
BENCHMARK_TEMPLATE(BM_Decompositions, true)->RING_ARGS;
BENCHMARK_TEMPLATE(BM_Axioms, false)->DenseRange(0, 1)->Unit(benchmark::kMillisecond);
BENCHMARK_TEMPLATE(BM_Axioms, true)->DenseRange(0, 1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
