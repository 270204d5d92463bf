#include <benchmark/benchmark.h>

#include "hdpart/enumerate.hpp"
#include "hdpart/groth.hpp"
#include "hdpart/lpp.hpp"

using namespace hdpart;

static void BM_BoxedCount(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(count_boxed_partitions({3, 3, 3, 2}));
}
BENCHMARK(BM_BoxedCount)->Unit(benchmark::kMillisecond);

static void BM_BoxedCountSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(count_boxed_partitions_serial({3, 3, 3, 2}));
}
BENCHMARK(BM_BoxedCountSerial)->Unit(benchmark::kMillisecond);

static void BM_VolumeCounts(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(volume_counts(3, 12));
}
BENCHMARK(BM_VolumeCounts)->Unit(benchmark::kMillisecond);

static void BM_VolumeCountsSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(volume_counts_serial(3, 12));
}
BENCHMARK(BM_VolumeCountsSerial)->Unit(benchmark::kMillisecond);

static void BM_BoxedPoly(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(boxed_poly({3, 2, 2, 2}));
}
BENCHMARK(BM_BoxedPoly)->Unit(benchmark::kMillisecond);

static void BM_BoxedPolySerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(boxed_poly_serial({3, 2, 2, 2}));
}
BENCHMARK(BM_BoxedPolySerial)->Unit(benchmark::kMillisecond);

static void BM_MonteCarlo(benchmark::State& state) {
  const GeomParams p{mpq_class(1, 2), {2, 2, 2}, 1};
  const NdArray rho({2, 2}, {2, 1, 1, 0});
  for (auto _ : state) benchmark::DoNotOptimize(monte_carlo_joint(rho, p, 50000));
}
BENCHMARK(BM_MonteCarlo)->Unit(benchmark::kMillisecond);

static void BM_MonteCarloSerial(benchmark::State& state) {
  const GeomParams p{mpq_class(1, 2), {2, 2, 2}, 1};
  const NdArray rho({2, 2}, {2, 1, 1, 0});
  for (auto _ : state) benchmark::DoNotOptimize(monte_carlo_joint_serial(rho, p, 50000));
}
BENCHMARK(BM_MonteCarloSerial)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
