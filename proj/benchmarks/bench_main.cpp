#include <benchmark/benchmark.h>

#include "twosided/analysis.hpp"
#include "twosided/cr.hpp"
#include "twosided/dynamics.hpp"
#include "twosided/fl.hpp"
#include "twosided/instances.hpp"

namespace {

using namespace twosided;

void BM_FlSolve(benchmark::State& state) {
  const auto c = static_cast<std::size_t>(state.range(0));
  Instance inst = sample_uniform_instance(4 * c, c, 2, 3, 3, 0.5, 7);
  for (auto _ : state) benchmark::DoNotOptimize(fl_solve(inst).engagement);
}
BENCHMARK(BM_FlSolve)->Arg(4)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_Cr2Recommend(benchmark::State& state) {
  const auto u = static_cast<std::size_t>(state.range(0));
  Instance inst = sample_uniform_instance(u, 6, 5, u * 5 / 6, 10, 0.4, 11);
  const PlatformState full = PlatformState::full(inst);
  for (auto _ : state) benchmark::DoNotOptimize(cr2_recommend(inst, full));
}
BENCHMARK(BM_Cr2Recommend)->Arg(12)->Arg(96)->Unit(benchmark::kMicrosecond);

void BM_UcDynamics(benchmark::State& state) {
  Instance inst = sample_uniform_instance(96, 6, 5, 80, 10, 0.4, 13);
  for (auto _ : state) benchmark::DoNotOptimize(run_dynamics(inst, Algorithm::UC).long_term_engagement);
}
BENCHMARK(BM_UcDynamics)->Unit(benchmark::kMicrosecond);

void BM_BoundMc(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_bound_mc(10, 7, 1'000'000, 1).estimate);
  state.SetItemsProcessed(state.iterations() * 1'000'000);
}
BENCHMARK(BM_BoundMc)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
