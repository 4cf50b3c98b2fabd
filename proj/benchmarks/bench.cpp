#include <benchmark/benchmark.h>

#include "einalg/geninv.hpp"
#include "einalg/jacobi.hpp"
#include "einalg/random.hpp"
#include "einalg/rol.hpp"

namespace {

using namespace einalg;

DenseTensor square_tensor(Index n) {
  Rng rng(42);
  return random_tensor(rng, EinsteinShape({n}, {n}));
}

void BM_EinsteinProduct(benchmark::State& state) {
  const Index n = state.range(0);
  Rng rng(1);
  const DenseTensor a = random_tensor(rng, EinsteinShape({n, n}, {n}));
  const DenseTensor b = random_tensor(rng, EinsteinShape({n}, {n, n}));
  for (auto _ : state) {
    benchmark::DoNotOptimize(einstein_product(a, b));
  }
}
BENCHMARK(BM_EinsteinProduct)->Arg(4)->Arg(8)->Arg(16);

void BM_MatrixSvd(benchmark::State& state) {
  const DenseTensor a = square_tensor(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(matrix_svd(rsh(a)));
  }
}
BENCHMARK(BM_MatrixSvd)->Arg(8)->Arg(16)->Arg(32);

void BM_MpInverse(benchmark::State& state) {
  Rng rng(2);
  const Index n = state.range(0);
  const DenseTensor a = random_tensor(rng, EinsteinShape({n, 2}, {n}));
  for (auto _ : state) {
    benchmark::DoNotOptimize(mp_inverse(a));
  }
}
BENCHMARK(BM_MpInverse)->Arg(4)->Arg(8)->Arg(16);

void BM_WmpInverse(benchmark::State& state) {
  Rng rng(3);
  const Index n = state.range(0);
  const DenseTensor a = random_tensor(rng, EinsteinShape({n}, {n, 2}));
  const WeightPair w(random_hpd(rng, {n}), random_hpd(rng, {n, 2}));
  for (auto _ : state) {
    benchmark::DoNotOptimize(wmp_inverse(a, w));
  }
}
BENCHMARK(BM_WmpInverse)->Arg(4)->Arg(8);

void BM_CatalogCase(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_catalog(7, 1, 1e-8, "sandwich-uv"));
  }
}
BENCHMARK(BM_CatalogCase);

}  // namespace

BENCHMARK_MAIN();
