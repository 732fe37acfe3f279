#include <benchmark/benchmark.h>

#include "opineq/campaign.hpp"
#include "opineq/generators.hpp"

using namespace opineq;

namespace {

CampaignConfig bench_config() {
  CampaignConfig c;
  c.seed = 99;
  c.trials_per_check = 4;
  return c;
}

void run(benchmark::State& state, ExecutionPolicy policy) {
  const CampaignConfig c = bench_config();
  long reports = 0;
  for (auto _ : state) {
    const CampaignResult r = run_campaign(c, policy);
    reports = r.total_reports;
    benchmark::DoNotOptimize(r.failures);
  }
  state.counters["reports"] = static_cast<double>(reports);
  state.counters["reports/s"] =
      benchmark::Counter(static_cast<double>(reports) * state.iterations(), benchmark::Counter::kIsRate);
}

void BM_CampaignSerial(benchmark::State& state) { run(state, ExecutionPolicy::Serial); }
void BM_CampaignParallel(benchmark::State& state) { run(state, ExecutionPolicy::Parallel); }

void BM_NumericalRadius(benchmark::State& state) {
  Rng rng(5);
  const ComplexMatrix a = gen_ginibre(static_cast<int>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(numerical_radius(a).value);
}

void BM_NumericalRadiusShift(benchmark::State& state) {
  const ComplexMatrix a = shift_matrix(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(numerical_radius(a).value);
}

}  // namespace

BENCHMARK(BM_CampaignSerial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_CampaignParallel)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_NumericalRadius)->Arg(2)->Arg(4)->Arg(8)->Arg(16)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_NumericalRadiusShift)->Arg(2)->Arg(8)->Unit(benchmark::kMicrosecond);
BENCHMARK_MAIN();
