#include <benchmark/benchmark.h>

#include "nilbc/catalog.hpp"
#include "nilbc/parser.hpp"

namespace {

void BM_TableIwasawa(benchmark::State& state) {
  const auto cs = nilbc::parse_structure("(0,0,w12)");
  for (auto _ : state) benchmark::DoNotOptimize(nilbc::full_table(cs));
}
BENCHMARK(BM_TableIwasawa)->Unit(benchmark::kMillisecond);

void BM_TableEightDimensional(benchmark::State& state) {
  const auto cs = nilbc::Catalog::builtin().at("08_8D").structure();
  for (auto _ : state) benchmark::DoNotOptimize(nilbc::full_table(cs));
}
BENCHMARK(BM_TableEightDimensional)->Unit(benchmark::kMillisecond);

void BM_CatalogGolden(benchmark::State& state) {
  const auto cases = nilbc::Catalog::builtin().list(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(nilbc::evaluate_all(cases, 1));
}
BENCHMARK(BM_CatalogGolden)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_Balanced(benchmark::State& state) {
  const auto cs = nilbc::parse_structure("(0,0,w12+w1~1+w1~2+1/8*w2~2)");
  const auto forms = nilbc::random_positive_forms(3, 20);
  for (auto _ : state) {
    for (const auto& h : forms) benchmark::DoNotOptimize(nilbc::is_balanced(cs, h));
  }
}
BENCHMARK(BM_Balanced)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
