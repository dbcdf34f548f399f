#include <benchmark/benchmark.h>

#include "bvtorus/densityrep.hpp"
#include "bvtorus/floermodel.hpp"
#include "bvtorus/liealg.hpp"
#include "bvtorus/random_elements.hpp"

namespace {

void BM_Bracket(benchmark::State& state) {
  const auto rank = static_cast<std::size_t>(state.range(0));
  bvtorus::ElementSampler s(1);
  const auto x = s.mixed_polyvector(rank);
  const auto y = s.mixed_polyvector(rank);
  for (auto _ : state) benchmark::DoNotOptimize(bvtorus::gerstenhaber_bracket(x, y));
}
BENCHMARK(BM_Bracket)->DenseRange(1, 3);

void BM_BvDelta(benchmark::State& state) {
  bvtorus::ElementSampler s(2);
  const auto x = s.mixed_polyvector(3);
  for (auto _ : state) benchmark::DoNotOptimize(bvtorus::bv_delta(x));
}
BENCHMARK(BM_BvDelta);

void BM_BvDeltaDivergence(benchmark::State& state) {
  bvtorus::ElementSampler s(2);
  const auto x = s.mixed_polyvector(3);
  for (auto _ : state) benchmark::DoNotOptimize(bvtorus::bv_delta_divergence(x));
}
BENCHMARK(BM_BvDeltaDivergence);

void BM_Embedding(benchmark::State& state) {
  const auto rank = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(bvtorus::verify_lie_embedding(rank));
}
BENCHMARK(BM_Embedding)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_ForcedAction(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(bvtorus::solve_forced_action(state.range(0)));
}
BENCHMARK(BM_ForcedAction)->DenseRange(1, 6);

void BM_Extract(benchmark::State& state) {
  const bvtorus::DensityRepSpec spec{bvtorus::Rational(-state.range(0), 2), bvtorus::Rational(-state.range(0), 2)};
  for (auto _ : state) benchmark::DoNotOptimize(bvtorus::extract_finite_sl2_submodule(spec));
}
BENCHMARK(BM_Extract)->DenseRange(1, 8);

}  // namespace
BENCHMARK_MAIN();
