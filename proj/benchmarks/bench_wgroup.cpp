#include "sgal/wgroup.hpp"

#include <benchmark/benchmark.h>

#include <random>

namespace {

void BM_WMul(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(1);
  std::vector<sgal::WElement> pool;
  for (int i = 0; i < 64; ++i) pool.push_back(sgal::w_random(n, rng));
  std::size_t k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sgal::w_mul(pool[k & 63], pool[(k + 17) & 63]));
    ++k;
  }
}
BENCHMARK(BM_WMul)->Arg(2)->Arg(4)->Arg(8)->Arg(12);

void BM_WEnumerate(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sgal::w_enumerate(n));
}
BENCHMARK(BM_WEnumerate)->DenseRange(1, 4);

void BM_QuotientD4(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(sgal::quotient(2, sgal::SubgroupSpec::D(0, 1)));
}
BENCHMARK(BM_QuotientD4);

}  // namespace
