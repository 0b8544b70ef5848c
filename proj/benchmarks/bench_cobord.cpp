#include <benchmark/benchmark.h>

#include "cobord/divdiff.hpp"
#include "cobord/genus.hpp"
#include "cobord/symmchern.hpp"

namespace {

void BM_FlagLocalization(benchmark::State& state) {
  const auto spec = cobord::flag_space(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(cobord::cobordism_class(spec));
}
BENCHMARK(BM_FlagLocalization)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_M10Localization(benchmark::State& state) {
  const auto spec = cobord::m10_space(cobord::M10Structure::J1);
  for (auto _ : state) benchmark::DoNotOptimize(cobord::cobordism_class(spec));
}
BENCHMARK(BM_M10Localization)->Unit(benchmark::kMillisecond);

void BM_BetaMatrix(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cobord::beta_matrix(n));
}
BENCHMARK(BM_BetaMatrix)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);

void BM_FlagExact(benchmark::State& state) {
  const auto method = state.range(0) == 0 ? cobord::LMethod::ComposedDivDiff : cobord::LMethod::Antisymmetrize;
  for (auto _ : state) benchmark::DoNotOptimize(cobord::flag_class_exact(4, method));
}
BENCHMARK(BM_FlagExact)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
