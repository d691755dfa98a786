#include <benchmark/benchmark.h>

#include "circlespace/fibration.hpp"
#include "circlespace/foliation.hpp"

using namespace circlespace;

namespace {

const FibrationCurve& moved_hopf() {
  static const FibrationCurve c = push_forward(induced_on_W(random_conformal(1)), hopf_curve());
  return c;
}

const TangentField& z4_field() {
  static const TangentField f = surface_distribution(Surface::parse("z4"));
  return f;
}

void BM_ValidateParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(validate_fibration(moved_hopf(), static_cast<int>(state.range(0))));
}

void BM_ValidateSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(validate_fibration_ref(moved_hopf(), static_cast<int>(state.range(0))));
}

void BM_LeavesParallel(benchmark::State& state) {
  const auto starts = sample_points(0, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(integrate_leaves(z4_field(), starts));
}

void BM_LeavesSerial(benchmark::State& state) {
  const auto starts = sample_points(0, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(integrate_leaves_ref(z4_field(), starts));
}

void BM_ConformalityParallel(benchmark::State& state) {
  const auto points = sample_points(1, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(conformality_scan(z4_field(), points));
}

void BM_ConformalitySerial(benchmark::State& state) {
  const auto points = sample_points(1, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(conformality_scan_ref(z4_field(), points));
}

}  // namespace

BENCHMARK(BM_ValidateParallel)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ValidateSerial)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LeavesParallel)->Arg(8)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LeavesSerial)->Arg(8)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ConformalityParallel)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ConformalitySerial)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
