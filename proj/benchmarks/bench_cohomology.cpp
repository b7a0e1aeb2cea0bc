#include "sgal/cohomology.hpp"

#include <benchmark/benchmark.h>

namespace {

const char* const kNames[] = {"Z2_REAL", "F3LIKE", "FAN2", "FAN(3)"};

void BM_H2BarComplex(benchmark::State& state) {
  const sgal::GalGroup g = sgal::gal_group(sgal::catalog(kNames[state.range(0)]));
  state.SetLabel(kNames[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(sgal::h2_dim(g));
}
BENCHMARK(BM_H2BarComplex)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_H2Resolution(benchmark::State& state) {
  const sgal::GalGroup g = sgal::gal_group(sgal::catalog(kNames[state.range(0)]));
  state.SetLabel(kNames[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(sgal::h2_dim_by_resolution(g));
}
BENCHMARK(BM_H2Resolution)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_MilnorExperiment(benchmark::State& state) {
  const sgal::Psg p = sgal::catalog("FAN(3)");
  for (auto _ : state) benchmark::DoNotOptimize(sgal::milnor_map_experiment(p));
}
BENCHMARK(BM_MilnorExperiment)->Unit(benchmark::kMillisecond);

}  // namespace
