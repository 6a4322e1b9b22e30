#include "platewave/lamb.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "platewave/errors.hpp"

namespace pw {

namespace {

constexpr double kPoleGuard = 1e-12;

// tan(z h)/z continued through z^2 <= 0 via tan(iz) = i tanh(z).
// Returns false when the evaluation sits on a tangent pole.
bool tan_over_z(double z2, double h, double& out) {
  if (z2 > 0.0) {
    const double z = std::sqrt(z2);
    const double c = std::cos(z * h);
    if (std::abs(c) < kPoleGuard) return false;
    out = std::tan(z * h) / z;
  } else if (z2 < 0.0) {
    const double z = std::sqrt(-z2);
    out = std::tanh(z * h) / z;
  } else {
    out = h;
  }
  return true;
}

// z tan(z h) continued through z^2 <= 0 (becomes -z tanh(z h)).
bool z_tan(double z2, double h, double& out) {
  if (z2 > 0.0) {
    const double z = std::sqrt(z2);
    const double c = std::cos(z * h);
    if (std::abs(c) < kPoleGuard) return false;
    out = z * std::tan(z * h);
  } else if (z2 < 0.0) {
    const double z = std::sqrt(-z2);
    out = -z * std::tanh(z * h);
  } else {
    out = 0.0;
  }
  return true;
}

// Through-thickness amplitudes and their y-derivatives for one family.
struct Profile {
  std::complex<double> gx, gy, dgx, dgy;
};

Profile mode_profile(const LambMode& mode, const MaterialParams& mat,
                     double Ly, double y) {
  using C = std::complex<double>;
  const BulkVelocities bulk = bulk_velocities(mat);
  const double k = mode.k, w = mode.omega, hh = 0.5 * Ly;
  const double yp = y - hh;  // midplane coordinate

  const C p = std::sqrt(C(w * w / (bulk.c_longitudinal * bulk.c_longitudinal) - k * k));
  const C q = std::sqrt(C(w * w / (bulk.c_transverse * bulk.c_transverse) - k * k));
  const C ik(0.0, k);

  Profile r;
  if (mode.family == ModeFamily::Antisymmetric) {
    const C B = 2.0 * ik * p * std::cos(p * hh) / ((k * k - q * q) * std::cos(q * hh));
    r.gx = -ik * std::sin(p * yp) - q * B * std::sin(q * yp);
    r.gy = p * std::cos(p * yp) + ik * B * std::cos(q * yp);
    r.dgx = -ik * p * std::cos(p * yp) - q * q * B * std::cos(q * yp);
    r.dgy = -p * p * std::sin(p * yp) - ik * q * B * std::sin(q * yp);
  } else {
    const C B = 2.0 * ik * p * std::sin(p * hh) / ((q * q - k * k) * std::sin(q * hh));
    r.gx = -ik * std::cos(p * yp) + q * B * std::cos(q * yp);
    r.gy = -p * std::sin(p * yp) + ik * B * std::sin(q * yp);
    r.dgx = ik * p * std::sin(p * yp) - q * q * B * std::sin(q * yp);
    r.dgy = -p * p * std::cos(p * yp) + ik * q * B * std::cos(q * yp);
  }
  return r;
}

void require_on_curve(const LambMode& mode, const MaterialParams& mat, double Ly) {
  const ResidualEval r =
      dispersion_residual(mode.family, mat, Ly, mode.omega, mode.c_phase);
  if (r.at_pole || !(r.normalized() < 1e-6))
    throw InvalidArgumentError("mode does not satisfy the frequency equation");
}

}  // namespace

BulkVelocities bulk_velocities(const MaterialParams& mat) {
  mat.validate();
  return {std::sqrt((mat.lambda + 2.0 * mat.mu) / mat.rho), std::sqrt(mat.mu / mat.rho)};
}

double bar_velocity(const MaterialParams& mat) { return std::sqrt(mat.E / mat.rho); }

double ResidualEval::normalized() const {
  if (at_pole) return std::numeric_limits<double>::infinity();
  return std::abs(value) / std::max(scale, std::numeric_limits<double>::min());
}

ResidualEval dispersion_residual(ModeFamily family, const MaterialParams& mat,
                                 double Ly, double omega, double c_phase) {
  if (!(c_phase > 0.0) || !(omega > 0.0))
    throw InvalidArgumentError("dispersion_residual: omega and c must be positive");

  const BulkVelocities bulk = bulk_velocities(mat);
  const double k = omega / c_phase;
  const double k2 = k * k;
  const double hh = 0.5 * Ly;
  const double p2 = omega * omega / (bulk.c_longitudinal * bulk.c_longitudinal) - k2;
  const double q2 = omega * omega / (bulk.c_transverse * bulk.c_transverse) - k2;
  const double sq = q2 - k2;

  // Antisymmetric: (q^2-k^2)^2 tan(p h) + 4 k^2 p q tan(q h) = 0, with the
  // common factor p removed so the p = 0 line is not a spurious zero.
  // Symmetric: same with p and q exchanged in the tangent factors.
  double t1 = 0.0, t2 = 0.0;
  bool ok;
  if (family == ModeFamily::Antisymmetric)
    ok = tan_over_z(p2, hh, t1) && z_tan(q2, hh, t2);
  else
    ok = tan_over_z(q2, hh, t1) && z_tan(p2, hh, t2);

  ResidualEval r;
  if (!ok) {
    r.at_pole = true;
    r.value = std::numeric_limits<double>::quiet_NaN();
    return r;
  }
  const double a = sq * sq * t1;
  const double b = 4.0 * k2 * t2;
  r.value = a + b;
  r.scale = std::abs(a) + std::abs(b);
  return r;
}

LambMode solve_phase_velocity(ModeFamily family, const MaterialParams& mat,
                              double Ly, double f0, int branch) {
  if (!(f0 > 0.0)) throw InvalidArgumentError("solve_phase_velocity: f0 must be positive");
  if (branch < 0) throw InvalidArgumentError("solve_phase_velocity: branch must be >= 0");

  const double omega = 2.0 * M_PI * f0;
  const double c_max = bulk_velocities(mat).c_longitudinal;
  const int n_scan = 2000;
  const double step = c_max / n_scan;

  auto eval = [&](double c) { return dispersion_residual(family, mat, Ly, omega, c); };

  int found = 0;
  double c_prev = 0.5 * step;
  ResidualEval r_prev = eval(c_prev);
  for (int i = 1; i <= n_scan; ++i) {
    const double c = 0.5 * step + i * step;
    const ResidualEval r = eval(c);
    if (!r.at_pole && !r_prev.at_pole &&
        (r.value == 0.0 || std::signbit(r.value) != std::signbit(r_prev.value))) {
      double a = c_prev, b = c;
      double ra = r_prev.value;
      for (int it = 0; it < 200 && (b - a) > 1e-12 * b; ++it) {
        const double m = 0.5 * (a + b);
        const ResidualEval rm = eval(m);
        if (rm.at_pole) break;
        if (rm.value == 0.0 || std::signbit(rm.value) == std::signbit(ra)) {
          a = m;
          ra = rm.value;
        } else {
          b = m;
        }
      }
      const double root = 0.5 * (a + b);
      const ResidualEval check = eval(root);
      // A bracket enclosing a tangent pole also changes sign; a genuine
      // root re-evaluates to a small residual.
      if (!check.at_pole && check.normalized() < 1e-8) {
        if (found == branch) {
          LambMode mode;
          mode.omega = omega;
          mode.c_phase = root;
          mode.k = omega / root;
          mode.family = family;
          mode.branch = branch;
          return mode;
        }
        ++found;
      }
    }
    c_prev = c;
    r_prev = r;
  }
  throw NoRootError("solve_phase_velocity: no root in the scanned interval");
}

ModeShape mode_shape(const LambMode& mode, const MaterialParams& mat,
                     double Ly, double y) {
  if (y < -1e-12 * Ly || y > Ly * (1.0 + 1e-12))
    throw InvalidArgumentError("mode_shape: y outside the plate thickness");
  require_on_curve(mode, mat, Ly);
  const Profile p = mode_profile(mode, mat, Ly, y);
  return {p.gx, p.gy};
}

ModeStress mode_stress(const LambMode& mode, const MaterialParams& mat,
                       double Ly, double y) {
  require_on_curve(mode, mat, Ly);
  const Profile p = mode_profile(mode, mat, Ly, y);
  const std::complex<double> ik(0.0, mode.k);
  const std::complex<double> ux_x = -ik * p.gx;
  const std::complex<double> uy_y = p.dgy;
  const std::complex<double> ux_y = p.dgx;
  const std::complex<double> uy_x = -ik * p.gy;
  ModeStress s;
  s.sxx = mat.lambda * (ux_x + uy_y) + 2.0 * mat.mu * ux_x;
  s.syy = mat.lambda * (ux_x + uy_y) + 2.0 * mat.mu * uy_y;
  s.sxy = mat.mu * (ux_y + uy_x);
  return s;
}

std::array<double, 2> lamb_field(const LambMode& mode, const MaterialParams& mat,
                                 double Ly, double t, double x, double y) {
  const Profile p = mode_profile(mode, mat, Ly, y);
  const std::complex<double> e =
      std::exp(std::complex<double>(0.0, mode.omega * t - mode.k * x));
  return {(p.gx * e).real(), (p.gy * e).real()};
}

TheoreticalCurve theoretical_curve(const MaterialParams& mat, double Ly, int n_samples) {
  if (n_samples < 2)
    throw InvalidArgumentError("theoretical_curve: need at least 2 samples");

  auto x_norm_of = [&](double f0) {
    const LambMode m = solve_phase_velocity(ModeFamily::Antisymmetric, mat, Ly, f0);
    return Ly * f0 / m.c_phase;
  };

  // Ly/wavelength grows monotonically with frequency for the fundamental
  // branch; bracket the target interval ends by bisection on f0.
  auto solve_f0 = [&](double x_target) {
    double lo = 1e2, hi = 1e7;
    for (int it = 0; it < 200 && (hi - lo) > 1e-9 * hi; ++it) {
      const double mid = 0.5 * (lo + hi);
      (x_norm_of(mid) < x_target ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
  };

  const double f_lo = solve_f0(0.01);
  const double f_hi = solve_f0(0.5);

  TheoreticalCurve curve;
  curve.c0 = bar_velocity(mat);
  curve.samples.reserve(n_samples);
  for (int i = 0; i < n_samples; ++i) {
    const double f0 = f_lo + (f_hi - f_lo) * i / (n_samples - 1);
    const LambMode m = solve_phase_velocity(ModeFamily::Antisymmetric, mat, Ly, f0);
    curve.samples.push_back({Ly * f0 / m.c_phase, m.c_phase / curve.c0, f0, m.c_phase});
  }
  return curve;
}

}  // namespace pw
