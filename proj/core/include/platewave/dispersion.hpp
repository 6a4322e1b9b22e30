#pragma once

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "platewave/lamb.hpp"
#include "platewave/mesh.hpp"
#include "platewave/simulation.hpp"

namespace pw {

/// Pulse arrival read off a probe trace: the time of the second local
/// maximum, bracketed by the nearest zero crossings on either side.
struct ArrivalEstimate {
  double t_arrive = 0.0;  ///< parabolic-refined time of the second maximum
  double t_min = 0.0;     ///< nearest sign change before t_arrive
  double t_max = 0.0;     ///< nearest sign change after t_arrive
};

/// Find the second local maximum of the sampled series (strict neighbor
/// comparison, 3-point parabolic refinement) and the nearest zero
/// crossings around it. Maxima below threshold_ratio of the global peak
/// are ignored; the default suppresses the fast low-amplitude precursor
/// that runs ahead of the main packet while keeping every genuine packet
/// peak. Throws InsufficientSignalError when fewer than two maxima clear
/// the threshold.
ArrivalEstimate extract_arrival(const std::vector<double>& series, double dt,
                                double threshold_ratio = 0.05);

inline ArrivalEstimate extract_arrival(const ProbeTrace& trace, double dt,
                                       double threshold_ratio = 0.05) {
  return extract_arrival(trace.series, dt, threshold_ratio);
}

struct VelocityFit {
  double C = 0.0;          ///< slope of x against arrival time
  double r2 = 0.0;         ///< coefficient of determination
  double intercept = 0.0;  ///< x at t = 0
};

/// Least-squares line through (t_i, x_i); the slope is the phase velocity.
/// Throws SingularFitError when all arrival times coincide.
VelocityFit fit_phase_velocity(const std::vector<std::pair<double, double>>& x_and_t);

/// One point of the measured dispersion curve in normalized coordinates.
struct DispersionPoint {
  double f0 = 0.0;
  double C = 0.0;
  double x_norm = 0.0;  ///< Ly * f0 / C
  double y_norm = 0.0;  ///< C / c0
  double fit_r2 = 0.0;
  double distance_to_theory = 0.0;  ///< orthogonal distance to the curve polyline
};

DispersionPoint dispersion_point(double f0, double C, const MaterialParams& mat,
                                 double Ly, const TheoreticalCurve& curve,
                                 double fit_r2 = 1.0);

/// Window widths C*(t_arrive - t_min) and C*(t_max - t_arrive) around the
/// arrival, as printed in the source procedure.
std::pair<double, double> comparison_window(const ArrivalEstimate& arr, double C);

/// The same window re-centered on the probe coordinate:
/// [x_probe - C*(t_arrive - t_min), x_probe + C*(t_max - t_arrive)].
std::pair<double, double> window_about_probe(double x_probe,
                                             const ArrivalEstimate& arr, double C);

/// Normalized per-component L2 discrepancy between the computed field and
/// the traveling analytic mode over a window, after normalizing each field
/// by its peak amplitude and aligning the free phase of the mode.
struct LambComparison {
  double discrepancy_x = 0.0;
  double discrepancy_y = 0.0;
  double phase = 0.0;  ///< aligned phase offset, radians
};

LambComparison compare_to_lamb(const Mesh& mesh, const NodeSet& nodes,
                               const Eigen::VectorXd& d, const LambMode& mode,
                               const MaterialParams& mat, double Ly, double t,
                               std::pair<double, double> window,
                               int grid_nx = 64, int grid_ny = 16);

}  // namespace pw
