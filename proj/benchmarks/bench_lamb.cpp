#include <benchmark/benchmark.h>

#include "platewave/lamb.hpp"

namespace {

void BM_SolvePhaseVelocity(benchmark::State& state) {
  const pw::MaterialParams mat = pw::MaterialParams::aluminium();
  const double f0 = static_cast<double>(state.range(0)) * 1e3;
  for (auto _ : state) {
    pw::LambMode mode = pw::solve_phase_velocity(pw::ModeFamily::Antisymmetric, mat, 1e-3, f0);
    benchmark::DoNotOptimize(mode);
  }
}

void BM_TheoreticalCurve(benchmark::State& state) {
  const pw::MaterialParams mat = pw::MaterialParams::aluminium();
  for (auto _ : state) {
    pw::TheoreticalCurve curve = pw::theoretical_curve(mat, 1e-3, static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(curve);
  }
}

}  // namespace

BENCHMARK(BM_SolvePhaseVelocity)->Arg(100)->Arg(600)->Arg(1100)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_TheoreticalCurve)->Arg(50)->Unit(benchmark::kMillisecond);
