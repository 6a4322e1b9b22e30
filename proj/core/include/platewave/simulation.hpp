#pragma once

#include <Eigen/Dense>
#include <array>
#include <vector>

#include "platewave/assembly.hpp"
#include "platewave/pulse.hpp"
#include "platewave/solver.hpp"

namespace pw {

/// Uniform time grid on [0, t_final] with N steps of size dt = t_final/N.
struct TimeGrid {
  double t_final = 0.0;
  int steps = 0;

  double dt() const { return t_final / steps; }
  void validate() const {
    if (!(t_final > 0.0) || steps < 1)
      throw InvalidArgumentError("TimeGrid: t_final must be positive and steps >= 1");
  }
};

/// Nodal coefficient vector at one time step, interleaved (u_x, u_y).
struct FieldSnapshot {
  int step = 0;
  double time = 0.0;
  Eigen::VectorXd d;
};

/// Vertical displacement u_y sampled at one probe point at every step;
/// series[0] belongs to t = 0 and is zero by the initial conditions.
struct ProbeTrace {
  Vec2 point;
  std::vector<double> series;
};

struct SimResult {
  TimeGrid grid;
  std::vector<FieldSnapshot> snapshots;
  std::vector<ProbeTrace> traces;
  double max_relative_residual = 0.0;  ///< max over steps of |A d - b| / |b|
};

/// Mesh/time-step guidance: h should stay below a quarter wavelength and
/// dt below a quarter period. Violations are warnings, not errors.
struct CflReport {
  double wavelength = 0.0;
  double h_limit = 0.0;
  double dt_limit = 0.0;
  bool h_ok = false;
  bool dt_ok = false;
  bool ok() const { return h_ok && dt_ok; }
};

CflReport cfl_check(double h, double dt, double f0, double c_ref);

/// Evaluate the interpolated displacement at an arbitrary point.
std::array<double, 2> evaluate_field(const Mesh& mesh, const NodeSet& nodes,
                                     const Eigen::VectorXd& d, double x, double y);

/// Backward-difference time stepper: from zero initial data, each call to
/// advance() solves A d_i = b(d_{i-1}, d_{i-2}) with boundary values
/// (0, g(t_i)) pinned on the driven edge. The loop is inherently
/// sequential.
class TimeStepper {
 public:
  TimeStepper(const AssembledSystem& sys, const Factorization& fact,
              const MaterialParams& mat, const PulseParams& pulse, double dt);

  void advance();

  int step() const { return step_; }
  double time() const { return step_ * dt_; }
  const Eigen::VectorXd& current() const { return d_prev_; }
  double max_relative_residual() const { return max_residual_; }

 private:
  const AssembledSystem& sys_;
  const Factorization& fact_;
  double rho_;
  PulseParams pulse_;
  double dt_;
  Eigen::VectorXd d_prev_, d_prev2_;
  int step_ = 0;
  double max_residual_ = 0.0;
};

/// Run the full time loop, recording u_y probe traces at every step and
/// the requested snapshots (by step index; 0 records the zero initial
/// field).
SimResult run_simulation(const Mesh& mesh, const NodeSet& nodes,
                         const MaterialParams& mat, const PulseParams& pulse,
                         const TimeGrid& grid, const std::vector<Vec2>& probes,
                         const std::vector<int>& snapshot_steps = {});

}  // namespace pw
