#include <benchmark/benchmark.h>

#include "braidcalc/calculus.hpp"
#include "braidcalc/corpus.hpp"

using namespace braidcalc;

namespace {

const char* kNames[] = {"kZ2", "kZ3", "sweedler", "kS3", "taft3"};

void BM_TensorOverH(benchmark::State& state) {
  HopfAlgebraData H = corpus::hopf_algebra("sweedler");
  auto bims = corpus::hopf_bimodules(H);
  const HopfBimodule& X = bims[state.range(0)];
  state.SetLabel(X.name);
  for (auto _ : state) benchmark::DoNotOptimize(tensor_over_H(H, X, X));
}
BENCHMARK(BM_TensorOverH)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

void BM_Braiding(benchmark::State& state) {
  HopfAlgebraData H = corpus::hopf_algebra("sweedler");
  auto bims = corpus::hopf_bimodules(H);
  const HopfBimodule& X = bims[state.range(0)];
  state.SetLabel(X.name);
  TensorOverH xx = tensor_over_H(H, X, X);
  for (auto _ : state) benchmark::DoNotOptimize(hopf_bimodule_braiding(H, X, X, xx, xx));
}
BENCHMARK(BM_Braiding)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

void BM_UniversalCalculus(benchmark::State& state) {
  HopfAlgebraData H = corpus::hopf_algebra(kNames[state.range(0)]);
  state.SetLabel(H.name);
  for (auto _ : state) benchmark::DoNotOptimize(universal_fodc(H));
}
BENCHMARK(BM_UniversalCalculus)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

void BM_ExteriorCalculus(benchmark::State& state) {
  FirstOrderCalculus c = universal_fodc(corpus::hopf_algebra(kNames[state.range(0)]));
  state.SetLabel(c.H.name);
  for (auto _ : state) benchmark::DoNotOptimize(exterior_calculus(c, 3));
}
BENCHMARK(BM_ExteriorCalculus)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
