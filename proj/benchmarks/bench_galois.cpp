#include "sgal/galois.hpp"

#include <benchmark/benchmark.h>

namespace {

void BM_RelationModuleFan(benchmark::State& state) {
  const sgal::Psg p = sgal::fan(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(sgal::relation_module(p));
}
BENCHMARK(BM_RelationModuleFan)->DenseRange(2, 8, 2);

void BM_GalGroupConstruction(benchmark::State& state) {
  const sgal::Psg p = sgal::fan(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(sgal::gal_group(p));
}
BENCHMARK(BM_GalGroupConstruction)->DenseRange(2, 6, 2);

void BM_GalElements(benchmark::State& state) {
  const sgal::GalGroup g = sgal::gal_group(sgal::fan(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(g.elements());
  state.counters["order"] = static_cast<double>(g.order());
}
BENCHMARK(BM_GalElements)->DenseRange(2, 4);

void BM_GalTable(benchmark::State& state) {
  const sgal::GalGroup g = sgal::gal_group(sgal::catalog(state.range(0) == 0 ? "FAN2" : "FAN(3)"));
  for (auto _ : state) benchmark::DoNotOptimize(g.table());
}
BENCHMARK(BM_GalTable)->Arg(0)->Arg(1);

void BM_InvolutionCosets(benchmark::State& state) {
  const sgal::GalGroup g = sgal::gal_group(sgal::fan(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(sgal::involution_cosets(g));
}
BENCHMARK(BM_InvolutionCosets)->DenseRange(2, 6, 2);

void BM_IsStandard(benchmark::State& state) {
  const sgal::Psg p = sgal::catalog("FAN(3)");
  for (auto _ : state) benchmark::DoNotOptimize(sgal::is_standard(p));
}
BENCHMARK(BM_IsStandard)->Unit(benchmark::kMillisecond);

}  // namespace
