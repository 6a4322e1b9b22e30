#include <benchmark/benchmark.h>

#include "platewave/solver.hpp"

namespace {

struct Problem {
  pw::Mesh mesh;
  pw::NodeSet nodes;
  pw::AssembledSystem sys;
};

Problem make_problem(int ny, int degree) {
  Problem p;
  p.mesh = pw::build_structured_mesh(pw::PlateGeometry{}, ny);
  p.nodes = pw::enumerate_nodes(p.mesh, degree);
  p.sys = pw::assemble(p.mesh, p.nodes, pw::MaterialParams::aluminium(), 1e-7);
  return p;
}

void BM_Factor(benchmark::State& state) {
  const Problem p = make_problem(static_cast<int>(state.range(0)),
                                 static_cast<int>(state.range(1)));
  for (auto _ : state) {
    pw::Factorization f = pw::factor(p.sys);
    benchmark::DoNotOptimize(f);
  }
  state.counters["dofs"] = static_cast<double>(p.sys.order());
}

void BM_Solve(benchmark::State& state) {
  const Problem p = make_problem(static_cast<int>(state.range(0)),
                                 static_cast<int>(state.range(1)));
  const pw::Factorization f = pw::factor(p.sys);
  const Eigen::VectorXd b = Eigen::VectorXd::Ones(p.sys.order());
  for (auto _ : state) {
    Eigen::VectorXd x = f.solve(b);
    benchmark::DoNotOptimize(x);
  }
  state.counters["dofs"] = static_cast<double>(p.sys.order());
}

}  // namespace

BENCHMARK(BM_Factor)->Args({4, 2})->Args({8, 2})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Solve)->Args({4, 2})->Args({8, 2})->Unit(benchmark::kMicrosecond);
