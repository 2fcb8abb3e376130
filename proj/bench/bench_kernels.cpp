// Serial reference vs OpenMP kernels.

#include <benchmark/benchmark.h>

#include "cavlqu/lqu.hpp"
#include "cavlqu/states.hpp"
#include "cavlqu/sweep.hpp"

namespace {

cavlqu::SweepConfig fig_config() {
  cavlqu::SweepConfig cfg;
  cfg.state = cavlqu::PureSpec{0.5773502691896257};
  cfg.kt_max = 3.0;
  cfg.steps = static_cast<std::size_t>(300);
  return cfg;
}

void BM_SweepSerial(benchmark::State& state) {
  const auto cfg = fig_config();
  for (auto _ : state) benchmark::DoNotOptimize(cavlqu::run_sweep_serial(cfg));
}
BENCHMARK(BM_SweepSerial)->Unit(benchmark::kMillisecond);

void BM_SweepParallel(benchmark::State& state) {
  const auto cfg = fig_config();
  for (auto _ : state) benchmark::DoNotOptimize(cavlqu::run_sweep(cfg));
}
BENCHMARK(BM_SweepParallel)->Unit(benchmark::kMillisecond);

void BM_BruteforceSerial(benchmark::State& state) {
  const auto rho = cavlqu::werner_state(cavlqu::WernerParam(0.6));
  for (auto _ : state) benchmark::DoNotOptimize(cavlqu::lqu_bruteforce_serial(rho, 0));
}
BENCHMARK(BM_BruteforceSerial)->Unit(benchmark::kMillisecond);

void BM_BruteforceParallel(benchmark::State& state) {
  const auto rho = cavlqu::werner_state(cavlqu::WernerParam(0.6));
  for (auto _ : state) benchmark::DoNotOptimize(cavlqu::lqu_bruteforce(rho, 0));
}
BENCHMARK(BM_BruteforceParallel)->Unit(benchmark::kMillisecond);

void BM_ClosedForm(benchmark::State& state) {
  const auto rho = cavlqu::werner_state(cavlqu::WernerParam(0.6));
  for (auto _ : state) benchmark::DoNotOptimize(cavlqu::lqu_bipartite(rho, 0));
}
BENCHMARK(BM_ClosedForm)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
