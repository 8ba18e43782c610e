#include <benchmark/benchmark.h>

#include <induction/confirmation.hpp>
#include <induction/posterior.hpp>

namespace {

using induction::Count;
using induction::Evidence;

void BM_PosteriorCdf(benchmark::State& state) {
  const auto n = static_cast<Count>(state.range(0));
  const Evidence e(n, n / 3);
  double x = 0.0;
  for (auto _ : state) {
    x += 1e-7;
    if (x >= 1.0) x = 0.0;
    benchmark::DoNotOptimize(induction::posterior_cdf(e, 0.3 + 0.1 * x));
  }
}
BENCHMARK(BM_PosteriorCdf)->RangeMultiplier(100)->Range(10, 1'000'000);

void BM_MaxConfidenceInterval(benchmark::State& state) {
  const auto n = static_cast<Count>(state.range(0));
  const Evidence e(n, n / 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(induction::max_confidence_interval(e, 0.05));
  }
}
BENCHMARK(BM_MaxConfidenceInterval)->RangeMultiplier(100)->Range(10, 100'000);

void BM_DegreeOfConfirmation(benchmark::State& state) {
  const auto n = static_cast<Count>(state.range(0));
  const Evidence e(n, n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(induction::degree_of_confirmation(e));
  }
}
BENCHMARK(BM_DegreeOfConfirmation)->Arg(2)->Arg(100)->Arg(10'000)->Unit(benchmark::kMillisecond);

}  // namespace
