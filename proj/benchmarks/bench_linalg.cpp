#include <benchmark/benchmark.h>

#include <random>

#include "braidcalc/linalg.hpp"

using namespace braidcalc;

namespace {

Matrix random_matrix(std::size_t r, std::size_t c, int conductor, double density, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> v(-5, 5), k(0, conductor - 1);
  std::bernoulli_distribution keep(density);
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (keep(rng)) m.set(i, j, Scalar(v(rng)) * Scalar::zeta(conductor, k(rng)));
  return m;
}

// Dense random input has heavy coefficient growth; corpus matrices are sparse with small entries.
void BM_Rank(benchmark::State& state) {
  Matrix m = random_matrix(state.range(0), state.range(0), static_cast<int>(state.range(1)), 0.3, 1);
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_Rank)->Args({16, 1})->Args({32, 1})->Args({64, 1})->Args({16, 5})->Args({24, 5})->Unit(benchmark::kMillisecond);

void BM_KernelBasis(benchmark::State& state) {
  std::size_t n = state.range(0);
  // rank deficient: product of n x n/2 and n/2 x n
  Matrix m = compose(random_matrix(n, n / 2, 3, 0.5, 2), random_matrix(n / 2, n, 3, 0.5, 3));
  for (auto _ : state) benchmark::DoNotOptimize(kernel_basis(m));
}
BENCHMARK(BM_KernelBasis)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

void BM_ComposeSparse(benchmark::State& state) {
  std::size_t n = state.range(0);
  Matrix a = random_matrix(n, n, 1, 0.02, 4), b = random_matrix(n, n, 1, 0.02, 5);
  for (auto _ : state) benchmark::DoNotOptimize(compose(a, b));
}
BENCHMARK(BM_ComposeSparse)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);

void BM_ScalarMulCyclotomic(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Scalar a = Scalar::zeta(n) + Scalar::ratio(3, 7), b = Scalar::zeta(n, 2) - Scalar(2);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_ScalarMulCyclotomic)->Arg(1)->Arg(3)->Arg(5)->Arg(12);

}  // namespace

BENCHMARK_MAIN();
