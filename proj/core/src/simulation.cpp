#include "platewave/simulation.hpp"

#include <algorithm>
#include <cmath>

#include "platewave/shape.hpp"

namespace pw {

CflReport cfl_check(double h, double dt, double f0, double c_ref) {
  if (!(h > 0.0) || !(dt > 0.0) || !(f0 > 0.0) || !(c_ref > 0.0))
    throw InvalidArgumentError("cfl_check: all inputs must be positive");
  CflReport r;
  r.wavelength = c_ref / f0;
  r.h_limit = r.wavelength / 4.0;
  r.dt_limit = 1.0 / (4.0 * f0);
  r.h_ok = h < r.h_limit;
  r.dt_ok = dt < r.dt_limit;
  return r;
}

std::array<double, 2> evaluate_field(const Mesh& mesh, const NodeSet& nodes,
                                     const Eigen::VectorXd& d, double x, double y) {
  if (d.size() != nodes.system_order())
    throw InvalidArgumentError("evaluate_field: coefficient length mismatch");
  const TriangleHit hit = locate_point(mesh, x, y);
  const ShapeEval s = shape_values(nodes.degree, hit.bary);
  const auto& loc = nodes.tri_nodes[hit.triangle];
  double ux = 0.0, uy = 0.0;
  for (int r = 0; r < s.count; ++r) {
    ux += s.values[r] * d[2 * loc[r]];
    uy += s.values[r] * d[2 * loc[r] + 1];
  }
  return {ux, uy};
}

TimeStepper::TimeStepper(const AssembledSystem& sys, const Factorization& fact,
                         const MaterialParams& mat, const PulseParams& pulse, double dt)
    : sys_(sys),
      fact_(fact),
      rho_(mat.rho),
      pulse_(pulse),
      dt_(dt),
      d_prev_(Eigen::VectorXd::Zero(sys.order())),
      d_prev2_(Eigen::VectorXd::Zero(sys.order())) {
  pulse_.validate();
  if (!(dt > 0.0)) throw InvalidArgumentError("TimeStepper: dt must be positive");
}

void TimeStepper::advance() {
  const double t = (step_ + 1) * dt_;
  const double g = pulse_value(pulse_, t);

  Eigen::VectorXd b = assemble_load(sys_, d_prev_, d_prev2_, rho_);
  apply_boundary_value(sys_, b, g);
  Eigen::VectorXd d = fact_.solve(b);
  // Pin the boundary values; the eliminated rows already reproduce them up
  // to roundoff, this makes the invariant exact.
  for (int node : sys_.dirichlet_nodes) {
    d[2 * node] = 0.0;
    d[2 * node + 1] = g;
  }

  const double bnorm = b.norm();
  if (bnorm > 0.0) {
    const double res =
        (sys_.A.selfadjointView<Eigen::Upper>() * d - b).norm() / bnorm;
    max_residual_ = std::max(max_residual_, res);
  }

  d_prev2_.swap(d_prev_);
  d_prev_ = std::move(d);
  ++step_;
}

SimResult run_simulation(const Mesh& mesh, const NodeSet& nodes,
                         const MaterialParams& mat, const PulseParams& pulse,
                         const TimeGrid& grid, const std::vector<Vec2>& probes,
                         const std::vector<int>& snapshot_steps) {
  grid.validate();
  mat.validate();

  // Resolve probes once; the per-step sample is then a local dot product.
  struct ProbeCtx {
    std::array<int, 6> nodes;
    std::array<double, 6> weights;
    int count;
  };
  std::vector<ProbeCtx> ctx;
  ctx.reserve(probes.size());
  for (const Vec2& p : probes) {
    TriangleHit hit;
    try {
      hit = locate_point(mesh, p.x, p.y);
    } catch (const OutOfDomainError&) {
      throw InvalidArgumentError("run_simulation: probe outside the plate");
    }
    const ShapeEval s = shape_values(nodes.degree, hit.bary);
    ProbeCtx c;
    c.count = s.count;
    c.nodes = nodes.tri_nodes[hit.triangle];
    c.weights = s.values;
    ctx.push_back(c);
  }

  const AssembledSystem sys = assemble(mesh, nodes, mat, grid.dt());
  const Factorization fact = factor(sys);
  TimeStepper stepper(sys, fact, mat, pulse, grid.dt());

  SimResult result;
  result.grid = grid;
  result.traces.resize(probes.size());
  for (std::size_t i = 0; i < probes.size(); ++i) {
    result.traces[i].point = probes[i];
    result.traces[i].series.reserve(grid.steps + 1);
    result.traces[i].series.push_back(0.0);  // zero initial data
  }

  std::vector<int> wanted(snapshot_steps);
  std::sort(wanted.begin(), wanted.end());
  wanted.erase(std::unique(wanted.begin(), wanted.end()), wanted.end());
  for (int s : wanted)
    if (s < 0 || s > grid.steps)
      throw InvalidArgumentError("run_simulation: snapshot step out of range");

  auto record_snapshot = [&](int step) {
    if (std::binary_search(wanted.begin(), wanted.end(), step))
      result.snapshots.push_back({step, step * grid.dt(), stepper.current()});
  };
  record_snapshot(0);

  for (int i = 1; i <= grid.steps; ++i) {
    stepper.advance();
    const Eigen::VectorXd& d = stepper.current();
    for (std::size_t pi = 0; pi < ctx.size(); ++pi) {
      const ProbeCtx& c = ctx[pi];
      double uy = 0.0;
      for (int r = 0; r < c.count; ++r) uy += c.weights[r] * d[2 * c.nodes[r] + 1];
      result.traces[pi].series.push_back(uy);
    }
    record_snapshot(i);
  }
  result.max_relative_residual = stepper.max_relative_residual();
  return result;
}

}  // namespace pw
