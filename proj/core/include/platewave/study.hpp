#pragma once

#include <utility>
#include <vector>

#include "platewave/config.hpp"
#include "platewave/mesh.hpp"
#include "platewave/simulation.hpp"

namespace pw {

/// One refinement level: the coarse mesh of a consecutive pair, with the
/// L2 difference of the two solutions at the comparison time.
struct ConvergenceRow {
  int ny = 0;
  double h = 0.0;
  long dof = 0;
  double e_t = 0.0;
};

struct ConvergenceResult {
  std::vector<ConvergenceRow> rows;
  double fitted_order = 0.0;  ///< least-squares slope of log e against log h
};

/// L2 norm of the difference of two FE solutions over the window
/// [x_lo, x_hi] x [0, Ly], integrated with quadrature on the fine mesh
/// (points outside the window are dropped); the coarse solution is
/// evaluated at the fine quadrature points.
double l2_error_between(const Mesh& coarse_mesh, const NodeSet& coarse_nodes,
                        const Eigen::VectorXd& coarse_d, const Mesh& fine_mesh,
                        const NodeSet& fine_nodes, const Eigen::VectorXd& fine_d,
                        std::pair<double, double> window);

/// Least-squares slope of log(e) against log(h).
double fit_log_slope(const std::vector<double>& h, const std::vector<double>& e);

/// Solve the propagation problem on each mesh of ny_list (strictly
/// increasing, at least 3 entries), snapshot every run at t_compare, and
/// pair consecutive meshes into ConvergenceRows. The comparison time and
/// window default to the 600 kHz reference values.
ConvergenceResult convergence_study(const RunConfig& config,
                                    const std::vector<int>& ny_list,
                                    double t_compare = 0.685e-5,
                                    std::pair<double, double> window = {0.9e-2, 1.08e-2});

/// Solution coefficients at an off-grid time, linearly interpolated
/// between the two neighboring steps.
Eigen::VectorXd snapshot_at_time(const SimResult& result, double t);

}  // namespace pw
