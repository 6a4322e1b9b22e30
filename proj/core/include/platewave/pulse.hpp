#pragma once

#include "platewave/errors.hpp"

namespace pw {

/// Gaussian-modulated sine pulse driven on the left edge:
/// g(t) = phi * sin(2 pi f0 t) * exp(-alpha (t - T0)^2 / T^2).
struct PulseParams {
  double f0 = 0.0;     ///< center frequency, Hz
  double phi = 0.0;    ///< amplitude, m
  double T0 = 0.0;     ///< center of the Gaussian factor, s
  double T = 0.0;      ///< width scale of the Gaussian factor, s
  double alpha = 0.0;  ///< sharpness of the Gaussian factor

  void validate() const {
    if (!(f0 > 0.0) || !(T > 0.0) || !(alpha > 0.0))
      throw InvalidArgumentError("PulseParams: f0, T and alpha must be positive");
  }
};

double pulse_value(const PulseParams& p, double t);

/// Calibrated pulse parameters for the seven standard center frequencies
/// (100, 200, 300, 600, 700, 900 and 1100 kHz). Throws for any other f0.
PulseParams pulse_for_frequency(double f0);

/// True when pulse_for_frequency knows this frequency.
bool has_pulse_preset(double f0);

}  // namespace pw
