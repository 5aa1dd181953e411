// Parallel kernels against the serial reference implementations.
#include <benchmark/benchmark.h>

#include <random>

#include "relkit/kernels.hpp"

namespace {

relkit::BitMatrix random_matrix(std::size_t n, double density, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(density);
  relkit::BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (coin(rng)) m.set(i, j);
  return m;
}

void BM_compose_parallel(benchmark::State& state) {
  const auto n = std::size_t(state.range(0));
  const auto a = random_matrix(n, 0.05, 1), b = random_matrix(n, 0.05, 2);
  for (auto _ : state) benchmark::DoNotOptimize(relkit::kernels::compose(a, b));
}

void BM_compose_reference(benchmark::State& state) {
  const auto n = std::size_t(state.range(0));
  const auto a = random_matrix(n, 0.05, 1), b = random_matrix(n, 0.05, 2);
  for (auto _ : state) benchmark::DoNotOptimize(relkit::kernels::reference::compose(a, b));
}

void BM_closure_parallel(benchmark::State& state) {
  const auto n = std::size_t(state.range(0));
  const auto a = random_matrix(n, 2.0 / double(n), 3);
  for (auto _ : state) benchmark::DoNotOptimize(relkit::kernels::closure(a));
}

void BM_closure_reference(benchmark::State& state) {
  const auto n = std::size_t(state.range(0));
  const auto a = random_matrix(n, 2.0 / double(n), 3);
  for (auto _ : state) benchmark::DoNotOptimize(relkit::kernels::reference::closure(a));
}

void BM_transpose_parallel(benchmark::State& state) {
  const auto a = random_matrix(std::size_t(state.range(0)), 0.1, 4);
  for (auto _ : state) benchmark::DoNotOptimize(relkit::kernels::transpose(a));
}

void BM_transpose_reference(benchmark::State& state) {
  const auto a = random_matrix(std::size_t(state.range(0)), 0.1, 4);
  for (auto _ : state) benchmark::DoNotOptimize(relkit::kernels::reference::transpose(a));
}

}  // namespace

BENCHMARK(BM_compose_parallel)->RangeMultiplier(4)->Range(64, 1024);
BENCHMARK(BM_compose_reference)->RangeMultiplier(4)->Range(64, 256);
BENCHMARK(BM_closure_parallel)->RangeMultiplier(4)->Range(64, 1024);
BENCHMARK(BM_closure_reference)->RangeMultiplier(4)->Range(64, 256);
BENCHMARK(BM_transpose_parallel)->RangeMultiplier(4)->Range(64, 1024);
BENCHMARK(BM_transpose_reference)->RangeMultiplier(4)->Range(64, 1024);

BENCHMARK_MAIN();
