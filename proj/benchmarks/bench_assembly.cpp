#include <benchmark/benchmark.h>

#include "platewave/assembly.hpp"

namespace {

void BM_Assemble(benchmark::State& state) {
  const int ny = static_cast<int>(state.range(0));
  const int degree = static_cast<int>(state.range(1));
  const pw::PlateGeometry geom{};
  const pw::MaterialParams mat = pw::MaterialParams::aluminium();
  const pw::Mesh mesh = pw::build_structured_mesh(geom, ny);
  const pw::NodeSet nodes = pw::enumerate_nodes(mesh, degree);

  for (auto _ : state) {
    auto sys = pw::assemble(mesh, nodes, mat, 1e-7);
    benchmark::DoNotOptimize(sys.A);
  }
  state.counters["elements_per_s"] = benchmark::Counter(
      static_cast<double>(mesh.triangle_count()), benchmark::Counter::kIsIterationInvariantRate);
  state.counters["dofs"] = static_cast<double>(nodes.system_order());
}

}  // namespace

BENCHMARK(BM_Assemble)->Args({2, 1})->Args({4, 1})->Args({8, 1})->Args({2, 2})->Args({4, 2})->Args({8, 2})->Unit(benchmark::kMillisecond);
