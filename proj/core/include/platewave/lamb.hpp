#pragma once

#include <array>
#include <complex>
#include <vector>

#include "platewave/material.hpp"

namespace pw {

enum class ModeFamily { Antisymmetric, Symmetric };

/// One guided plate mode: a root (omega, k) of the frequency equation.
struct LambMode {
  double omega = 0.0;    ///< angular frequency, rad/s
  double k = 0.0;        ///< wavenumber 2 pi / wavelength, 1/m
  double c_phase = 0.0;  ///< phase velocity omega / k, m/s
  ModeFamily family = ModeFamily::Antisymmetric;
  int branch = 0;
};

struct BulkVelocities {
  double c_longitudinal = 0.0;
  double c_transverse = 0.0;
};

BulkVelocities bulk_velocities(const MaterialParams& mat);

/// Thin-rod reference velocity sqrt(E/rho) used to normalize the curve.
double bar_velocity(const MaterialParams& mat);

/// One evaluation of the frequency equation at (omega, c). `value` is a
/// real continuation of the transcendental form, continuous in c between
/// the tangent poles; `scale` is the magnitude of its terms, so
/// |value|/scale is a dimensionless residual. Evaluations that land on a
/// pole set `at_pole` instead of returning a number.
struct ResidualEval {
  double value = 0.0;
  double scale = 0.0;
  bool at_pole = false;

  double normalized() const;
};

ResidualEval dispersion_residual(ModeFamily family, const MaterialParams& mat,
                                 double Ly, double omega, double c_phase);

/// Find the phase velocity of the given branch (0 = fundamental) at
/// frequency f0 by scanning c upward from zero to the longitudinal bulk
/// velocity and bisecting each sign change. Throws NoRootError when the
/// scan finds nothing.
LambMode solve_phase_velocity(ModeFamily family, const MaterialParams& mat,
                              double Ly, double f0, int branch = 0);

/// Complex through-thickness displacement amplitudes g(y) of a mode, with
/// u(t,x,y) = Re(g(y) exp(i(omega t - k x))). Antisymmetric modes have
/// g_x odd and g_y even about the midplane.
struct ModeShape {
  std::complex<double> gx;
  std::complex<double> gy;
};

ModeShape mode_shape(const LambMode& mode, const MaterialParams& mat,
                     double Ly, double y);

/// Complex stress amplitudes of the mode at thickness coordinate y; the
/// traction components (sxy, syy) vanish on both faces.
struct ModeStress {
  std::complex<double> sxx;
  std::complex<double> syy;
  std::complex<double> sxy;
};

ModeStress mode_stress(const LambMode& mode, const MaterialParams& mat,
                       double Ly, double y);

/// Real displacement of the traveling mode at (t, x, y).
std::array<double, 2> lamb_field(const LambMode& mode, const MaterialParams& mat,
                                 double Ly, double t, double x, double y);

struct CurveSample {
  double x_norm = 0.0;   ///< Ly / wavelength
  double y_norm = 0.0;   ///< c_phase / c0
  double f0 = 0.0;       ///< Hz
  double c_phase = 0.0;  ///< m/s
};

/// Fundamental antisymmetric dispersion curve sampled with strictly
/// increasing first coordinate covering Ly/wavelength in [0.01, 0.5].
struct TheoreticalCurve {
  std::vector<CurveSample> samples;
  double c0 = 0.0;
};

TheoreticalCurve theoretical_curve(const MaterialParams& mat, double Ly, int n_samples);

}  // namespace pw
