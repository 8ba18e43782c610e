#include <benchmark/benchmark.h>

#include <induction/simulation.hpp>
#include <induction/succession.hpp>

namespace {

void BM_SimulateBernoulli(benchmark::State& state) {
  const auto n = static_cast<induction::Count>(state.range(0));
  std::uint64_t seed = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(induction::simulate_bernoulli(0.5, n, seed++, 1000));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SimulateBernoulli)->Arg(100'000)->Arg(1'000'000)->Unit(benchmark::kMillisecond);

void BM_SimulateDemon(benchmark::State& state) {
  std::uint64_t seed = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(induction::simulate_demon(induction::DemonConfig{}, 1'000'000, seed++));
  }
}
BENCHMARK(BM_SimulateDemon)->Unit(benchmark::kMillisecond);

void BM_SuccessionMonteCarlo(benchmark::State& state) {
  const induction::Evidence e(8, 5);
  std::uint64_t seed = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(induction::succession_monte_carlo(e, 100'000, seed++));
  }
}
BENCHMARK(BM_SuccessionMonteCarlo)->Unit(benchmark::kMillisecond);

}  // namespace
