#include <benchmark/benchmark.h>

#include "extremal/angular.hpp"
#include "extremal/estimate.hpp"
#include "extremal/glue.hpp"
#include "extremal/limits.hpp"
#include "extremal/samplers.hpp"

using namespace extremal;

static void BM_SampleEx51(benchmark::State& state) {
  const ModelSpec m = make_ex51(1);
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sample(m, n));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SampleEx51)->Arg(100000)->Arg(1000000)->Unit(benchmark::kMillisecond);

static void BM_SampleFromAngular(benchmark::State& state) {
  const ModelSpec m = make_from_angular(angular_from_ratio_law(uniform_distribution()), 1);
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sample(m, n));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SampleFromAngular)->Arg(100000)->Arg(1000000)->Unit(benchmark::kMillisecond);

static void BM_TailEstimate(benchmark::State& state) {
  const SampleBatch b = sample(make_ex52(0.5, 1), static_cast<std::size_t>(state.range(0)));
  const ConeRect r = ConeRect::upper(4, 1);
  for (auto _ : state) benchmark::DoNotOptimize(tail_measure_estimate(b, 1000, Scaling{1, 1}, r));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_TailEstimate)->Arg(1000000)->Unit(benchmark::kMillisecond);

static void BM_MuFromS(benchmark::State& state) {
  const AngularMeasure s = state.range(0) == 0 ? uniform2_angular() : ex51iii_angular();
  for (auto _ : state) benchmark::DoNotOptimize(mu_from_S(s, 1.5, 0.7));
}
BENCHMARK(BM_MuFromS)->Arg(0)->Arg(1);

static void BM_NormalizationDefect(benchmark::State& state) {
  const AngularMeasure s = inv1mw_angular();
  for (auto _ : state) benchmark::DoNotOptimize(normalization_defect(s));
}
BENCHMARK(BM_NormalizationDefect);

static void BM_GlueComplRect(benchmark::State& state) {
  const AngularMeasure s = uniform2_angular();
  const TailMeasure mu = measure_from_angular(s, ConeId::UpperStrip);
  const TailMeasure nu = measure_from_angular(s, ConeId::RightStrip);
  const ConeRect r = ConeRect::compl_rect(2, 3);
  for (auto _ : state) benchmark::DoNotOptimize(glue(mu, nu, r, 0.1));
}
BENCHMARK(BM_GlueComplRect)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
