#include <benchmark/benchmark.h>

#include <random>

#include "nilbc/linalg.hpp"

namespace {

nilbc::ExactMatrix random_matrix(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-5, 5), den(1, 4);
  nilbc::ExactMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      m(r, c) = nilbc::Gaussian::rational(num(rng), den(rng)) +
                nilbc::Gaussian::i() * nilbc::Gaussian::rational(num(rng), den(rng));
    }
  }
  return m;
}

void BM_ExactRank(benchmark::State& state) {
  const auto m = random_matrix(static_cast<std::size_t>(state.range(0)), 42);
  for (auto _ : state) benchmark::DoNotOptimize(nilbc::exact_rank(m));
}
BENCHMARK(BM_ExactRank)->RangeMultiplier(2)->Range(4, 32);

void BM_RowBasis(benchmark::State& state) {
  const auto m = random_matrix(static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(nilbc::row_basis(m));
}
BENCHMARK(BM_RowBasis)->RangeMultiplier(2)->Range(4, 16);

}  // namespace

BENCHMARK_MAIN();
