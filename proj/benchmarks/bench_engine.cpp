#include <benchmark/benchmark.h>

#include "gwilf/engine.hpp"
#include "gwilf/formulas.hpp"
#include "gwilf/oracle.hpp"

using gwilf::Engine;
using gwilf::Permutation;
using gwilf::QPoly;

namespace {

void BM_TruncatedCountsK3(benchmark::State& state) {
  const unsigned r = static_cast<unsigned>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  for (auto _ : state) {
    Engine engine;  // cold run: no result-cache reuse
    benchmark::DoNotOptimize(engine.truncated_counts(3, r, n));
  }
}
BENCHMARK(BM_TruncatedCountsK3)
    ->Args({0, 50})
    ->Args({1, 50})
    ->Args({2, 50})
    ->Args({2, 100})
    ->Unit(benchmark::kMillisecond);

void BM_TruncatedCountsK4(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    Engine engine;
    benchmark::DoNotOptimize(engine.truncated_counts(4, 1, n));
  }
}
BENCHMARK(BM_TruncatedCountsK4)->Arg(15)->Arg(23)->Unit(benchmark::kMillisecond);

void BM_ExactDistribution(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  for (auto _ : state) {
    Engine engine;
    benchmark::DoNotOptimize(engine.distribution(k, n));
  }
}
BENCHMARK(BM_ExactDistribution)
    ->Args({3, 10})
    ->Args({3, 12})
    ->Args({4, 8})
    ->Args({5, 8})
    ->Unit(benchmark::kMillisecond);

void BM_BruteDistribution(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(gwilf::distribution_brute(Permutation::identity(3), n));
}
BENCHMARK(BM_BruteDistribution)->Arg(6)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_QPolyMul(benchmark::State& state) {
  const long n = state.range(0);
  const QPoly a = gwilf::q_factorial(n);
  const QPoly b = gwilf::q_factorial(n - 1);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_QPolyMul)->Arg(10)->Arg(20)->Arg(40);

}  // namespace

BENCHMARK_MAIN();
