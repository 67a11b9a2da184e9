#include <benchmark/benchmark.h>

#include "critgraph/distributions.hpp"
#include "critgraph/explore.hpp"
#include "critgraph/harness.hpp"

using namespace critgraph;

namespace {

Execution exec_of(const benchmark::State& state) {
  return state.range(0) == 0 ? Execution::serial : Execution::parallel;
}

void BM_TailSweeps(benchmark::State& state) {
  const auto g = GraphParams::critical(100'000);
  const std::int64_t reach = floor_coef_n23(2.0, g.n) + 1;
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(count_component_at_least(g, reach, 256, seed++, exec_of(state)));
  }
  state.SetItemsProcessed(state.iterations() * 256);
}
BENCHMARK(BM_TailSweeps)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

void BM_WalkIdentity(benchmark::State& state) {
  const WalkParams w{1000, 1e-3, 10, std::nullopt};
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(martingale_identity_check(IdentityKind::mean_s_gamma, w, 100'000, seed++,
                                                       exec_of(state)));
  }
  state.SetItemsProcessed(state.iterations() * 100'000);
}
BENCHMARK(BM_WalkIdentity)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

void BM_Overshoots(benchmark::State& state) {
  const WalkParams w{1'000'000, 1e-6, 50, std::nullopt};
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(collect_overshoots(w, 20'000, seed++, exec_of(state)));
  }
  state.SetItemsProcessed(state.iterations() * 20'000);
}
BENCHMARK(BM_Overshoots)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

// Single-stream throughput of the exploration recursion (steps per second).
void BM_SweepSteps(benchmark::State& state) {
  const auto g = GraphParams::critical(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    RngStream rng(seed++, 0);
    benchmark::DoNotOptimize(sweep_streaming(g, rng));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SweepSteps)->Arg(1'000'000)->Arg(10'000'000)->Unit(benchmark::kMillisecond);

void BM_Binomial(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  const BinomialSampler sampler(1.0 / static_cast<double>(n));
  RngStream rng(1, 0);
  for (auto _ : state) benchmark::DoNotOptimize(sampler(n, rng));
}
BENCHMARK(BM_Binomial)->Arg(1000)->Arg(1'000'000'000);

void BM_BinomialBtrs(benchmark::State& state) {
  const BinomialSampler sampler(0.4);
  RngStream rng(1, 0);
  for (auto _ : state) benchmark::DoNotOptimize(sampler(100'000, rng));
}
BENCHMARK(BM_BinomialBtrs);

}  // namespace

BENCHMARK_MAIN();
