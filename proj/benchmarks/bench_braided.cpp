#include <benchmark/benchmark.h>

#include "braidcalc/corpus.hpp"
#include "braidcalc/tensor_hopf.hpp"

using namespace braidcalc;

namespace {

BraidedSpace space(int which) {
  switch (which) {
    case 0: return BraidedSpace::swap(2);
    case 1: return BraidedSpace::swap(3);
    case 2: return corpus::diagonal_zeta5();
    default: return corpus::hecke();
  }
}

void BM_BraidedFactorial(benchmark::State& state) {
  BraidedSpace X = space(static_cast<int>(state.range(0)));
  int j = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(braided_factorial(j, X));
}
BENCHMARK(BM_BraidedFactorial)
    ->ArgsProduct({{0, 1, 2, 3}, {3, 4}})
    ->Args({0, 5})
    ->Args({2, 5})
    ->Unit(benchmark::kMillisecond);

void BM_WedgeDims(benchmark::State& state) {
  BraidedSpace X = space(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_wedge(X, 4).dims());
}
BENCHMARK(BM_WedgeDims)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_TensorHopfCheck(benchmark::State& state) {
  BraidedSpace X = space(static_cast<int>(state.range(0)));
  GradedBialgebra T = build_tensor_hopf(X, TensorVariant::shuffle_coproduct, 4);
  for (auto _ : state) benchmark::DoNotOptimize(check_graded_structure(T, StructureLevel::hopf));
}
BENCHMARK(BM_TensorHopfCheck)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
