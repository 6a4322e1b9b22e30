#include "platewave/dispersion.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>

#include "platewave/errors.hpp"

namespace pw {

ArrivalEstimate extract_arrival(const std::vector<double>& series, double dt,
                                double threshold_ratio) {
  if (!(dt > 0.0)) throw InvalidArgumentError("extract_arrival: dt must be positive");
  if (!(threshold_ratio > 0.0) || !(threshold_ratio < 1.0))
    throw InvalidArgumentError("extract_arrival: threshold_ratio must be in (0, 1)");
  const int n = static_cast<int>(series.size());
  if (n < 3) throw InsufficientSignalError("extract_arrival: trace too short");

  const double peak = *std::max_element(series.begin(), series.end());
  if (!(peak > 0.0))
    throw InsufficientSignalError("extract_arrival: trace has no positive excursion");
  const double threshold = threshold_ratio * peak;

  std::vector<int> maxima;
  for (int i = 1; i + 1 < n; ++i) {
    if (series[i] > threshold && series[i] > series[i - 1] && series[i] > series[i + 1])
      maxima.push_back(i);
  }
  if (maxima.size() < 2)
    throw InsufficientSignalError("extract_arrival: fewer than two maxima above threshold");

  const int i = maxima[1];  // second maximum by time order
  ArrivalEstimate arr;

  // 3-point parabolic refinement of the peak position.
  const double y0 = series[i - 1], y1 = series[i], y2 = series[i + 1];
  const double denom = y0 - 2.0 * y1 + y2;
  const double delta = (denom != 0.0) ? 0.5 * (y0 - y2) / denom : 0.0;
  arr.t_arrive = (i + delta) * dt;

  auto interp_zero = [&](int a, int b) {
    // linear interpolation of the sign change between samples a < b
    const double ya = series[a], yb = series[b];
    return (a + ya / (ya - yb)) * dt;
  };

  int lo = -1;
  for (int j = i; j > 0; --j) {
    if ((series[j - 1] <= 0.0 && series[j] > 0.0) ||
        (series[j - 1] >= 0.0 && series[j] < 0.0)) {
      lo = j - 1;
      break;
    }
  }
  int hi = -1;
  for (int j = i; j + 1 < n; ++j) {
    if ((series[j] > 0.0 && series[j + 1] <= 0.0) ||
        (series[j] < 0.0 && series[j + 1] >= 0.0)) {
      hi = j;
      break;
    }
  }
  if (lo < 0 || hi < 0)
    throw InsufficientSignalError("extract_arrival: no zero crossing brackets the maximum");

  arr.t_min = interp_zero(lo, lo + 1);
  arr.t_max = interp_zero(hi, hi + 1);
  return arr;
}

VelocityFit fit_phase_velocity(const std::vector<std::pair<double, double>>& x_and_t) {
  const std::size_t n = x_and_t.size();
  if (n < 2) throw InvalidArgumentError("fit_phase_velocity: need at least two points");

  double st = 0.0, sx = 0.0;
  for (const auto& [x, t] : x_and_t) {
    st += t;
    sx += x;
  }
  const double tbar = st / n, xbar = sx / n;
  double stt = 0.0, stx = 0.0, sxx = 0.0;
  for (const auto& [x, t] : x_and_t) {
    stt += (t - tbar) * (t - tbar);
    stx += (t - tbar) * (x - xbar);
    sxx += (x - xbar) * (x - xbar);
  }
  if (stt == 0.0)
    throw SingularFitError("fit_phase_velocity: all arrival times coincide");

  VelocityFit fit;
  fit.C = stx / stt;
  fit.intercept = xbar - fit.C * tbar;
  fit.r2 = (sxx > 0.0) ? (stx * stx) / (stt * sxx) : 1.0;
  return fit;
}

DispersionPoint dispersion_point(double f0, double C, const MaterialParams& mat,
                                 double Ly, const TheoreticalCurve& curve,
                                 double fit_r2) {
  if (!(C > 0.0)) throw InvalidArgumentError("dispersion_point: C must be positive");

  DispersionPoint p;
  p.f0 = f0;
  p.C = C;
  p.x_norm = Ly * f0 / C;
  p.y_norm = C / bar_velocity(mat);
  p.fit_r2 = fit_r2;

  // orthogonal distance to the sampled polyline
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i + 1 < curve.samples.size(); ++i) {
    const double ax = curve.samples[i].x_norm, ay = curve.samples[i].y_norm;
    const double bx = curve.samples[i + 1].x_norm, by = curve.samples[i + 1].y_norm;
    const double dx = bx - ax, dy = by - ay;
    const double len2 = dx * dx + dy * dy;
    double s = (len2 > 0.0)
                   ? ((p.x_norm - ax) * dx + (p.y_norm - ay) * dy) / len2
                   : 0.0;
    s = std::clamp(s, 0.0, 1.0);
    best = std::min(best, std::hypot(p.x_norm - (ax + s * dx), p.y_norm - (ay + s * dy)));
  }
  p.distance_to_theory = best;
  return p;
}

std::pair<double, double> comparison_window(const ArrivalEstimate& arr, double C) {
  return {C * (arr.t_arrive - arr.t_min), C * (arr.t_max - arr.t_arrive)};
}

std::pair<double, double> window_about_probe(double x_probe,
                                             const ArrivalEstimate& arr, double C) {
  const auto [before, after] = comparison_window(arr, C);
  return {x_probe - before, x_probe + after};
}

LambComparison compare_to_lamb(const Mesh& mesh, const NodeSet& nodes,
                               const Eigen::VectorXd& d, const LambMode& mode,
                               const MaterialParams& mat, double Ly, double t,
                               std::pair<double, double> window,
                               int grid_nx, int grid_ny) {
  const auto [x_lo, x_hi] = window;
  if (!(x_hi > x_lo))
    throw InvalidArgumentError("compare_to_lamb: empty comparison window");
  if (x_lo < 0.0 || x_hi > mesh.geom.Lx)
    throw InvalidArgumentError("compare_to_lamb: window outside the plate");
  if (grid_nx < 2 || grid_ny < 2)
    throw InvalidArgumentError("compare_to_lamb: grid must be at least 2x2");

  const int npx = grid_nx + 1, npy = grid_ny + 1;
  const int npts = npx * npy;

  Eigen::VectorXd hx(npts), hy(npts);
  std::vector<std::complex<double>> gx_amp(npts), gy_amp(npts);

  double amp_h = 0.0;
  for (int jy = 0; jy < npy; ++jy) {
    const double y = Ly * jy / grid_ny;
    for (int jx = 0; jx < npx; ++jx) {
      const double x = x_lo + (x_hi - x_lo) * jx / grid_nx;
      const int idx = jy * npx + jx;
      const auto u = evaluate_field(mesh, nodes, d, x, y);
      hx[idx] = u[0];
      hy[idx] = u[1];
      amp_h = std::max(amp_h, std::hypot(u[0], u[1]));

      const ModeShape g = mode_shape(mode, mat, Ly, y);
      const std::complex<double> e =
          std::exp(std::complex<double>(0.0, mode.omega * t - mode.k * x));
      gx_amp[idx] = g.gx * e;
      gy_amp[idx] = g.gy * e;
    }
  }
  if (amp_h == 0.0)
    throw InvalidArgumentError("compare_to_lamb: computed field is identically zero");
  hx /= amp_h;
  hy /= amp_h;

  // The analytic mode carries an arbitrary phase and amplitude: normalize
  // the rotated field by its own peak amplitude and pick the phase that
  // minimizes the total L2 difference.
  auto evaluate_phase = [&](double phase, double* dx_out, double* dy_out) {
    const std::complex<double> rot = std::exp(std::complex<double>(0.0, phase));
    double amp_a = 0.0;
    for (int i = 0; i < npts; ++i) {
      const double ax = (gx_amp[i] * rot).real();
      const double ay = (gy_amp[i] * rot).real();
      amp_a = std::max(amp_a, std::hypot(ax, ay));
    }
    if (amp_a == 0.0) amp_a = 1.0;
    double dx2 = 0.0, dy2 = 0.0, nx2 = 0.0, ny2 = 0.0;
    for (int i = 0; i < npts; ++i) {
      const double ax = (gx_amp[i] * rot).real() / amp_a;
      const double ay = (gy_amp[i] * rot).real() / amp_a;
      dx2 += (hx[i] - ax) * (hx[i] - ax);
      dy2 += (hy[i] - ay) * (hy[i] - ay);
      nx2 += ax * ax;
      ny2 += ay * ay;
    }
    if (dx_out) *dx_out = std::sqrt(dx2 / std::max(nx2, 1e-300));
    if (dy_out) *dy_out = std::sqrt(dy2 / std::max(ny2, 1e-300));
    return dx2 + dy2;
  };

  const int n_scan = 720;
  double best_phase = 0.0, best_obj = std::numeric_limits<double>::infinity();
  for (int s = 0; s < n_scan; ++s) {
    const double phase = 2.0 * M_PI * s / n_scan;
    const double obj = evaluate_phase(phase, nullptr, nullptr);
    if (obj < best_obj) {
      best_obj = obj;
      best_phase = phase;
    }
  }
  // golden-section polish around the best scan cell
  double a = best_phase - 2.0 * M_PI / n_scan;
  double b = best_phase + 2.0 * M_PI / n_scan;
  const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
  double c1 = b - gr * (b - a), c2 = a + gr * (b - a);
  double f1 = evaluate_phase(c1, nullptr, nullptr);
  double f2 = evaluate_phase(c2, nullptr, nullptr);
  for (int it = 0; it < 60; ++it) {
    if (f1 < f2) {
      b = c2;
      c2 = c1;
      f2 = f1;
      c1 = b - gr * (b - a);
      f1 = evaluate_phase(c1, nullptr, nullptr);
    } else {
      a = c1;
      c1 = c2;
      f1 = f2;
      c2 = a + gr * (b - a);
      f2 = evaluate_phase(c2, nullptr, nullptr);
    }
  }
  best_phase = 0.5 * (a + b);

  LambComparison cmp;
  cmp.phase = best_phase;
  evaluate_phase(best_phase, &cmp.discrepancy_x, &cmp.discrepancy_y);
  return cmp;
}

}  // namespace pw
