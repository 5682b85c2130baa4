// Serial vs OpenMP timings for the two parallel kernels.

#include <benchmark/benchmark.h>

#include "corrtree/bootstrap.hpp"
#include "corrtree/metric.hpp"
#include "oracles.hpp"

using namespace corrtree;

namespace {

ReturnPanel panel(std::size_t n, std::size_t rows) {
  std::mt19937_64 rng(2024);
  return testing::random_returns(n, rows, rng);
}

void BM_Correlation(benchmark::State& state, Execution exec) {
  const auto r = panel(static_cast<std::size_t>(state.range(0)), 240);
  for (auto _ : state) benchmark::DoNotOptimize(correlation_matrix(r, exec));
}

void BM_Bootstrap(benchmark::State& state, Execution exec) {
  const auto r = panel(28, 47);
  const BootstrapConfig config{static_cast<std::size_t>(state.range(0)), 1};
  for (auto _ : state) benchmark::DoNotOptimize(link_reliability(r, config, exec));
}

}  // namespace

BENCHMARK_CAPTURE(BM_Correlation, serial, Execution::serial)->Arg(28)->Arg(200);
BENCHMARK_CAPTURE(BM_Correlation, parallel, Execution::parallel)->Arg(28)->Arg(200);
BENCHMARK_CAPTURE(BM_Bootstrap, serial, Execution::serial)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Bootstrap, parallel, Execution::parallel)->Arg(200)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
