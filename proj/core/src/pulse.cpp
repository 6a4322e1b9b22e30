#include "platewave/pulse.hpp"

#include <array>
#include <cmath>
#include <string>

namespace pw {

namespace {

struct Preset {
  double f0, alpha, T0, T;
};

// One column per calibrated drive frequency; phi = 1e-3 m for all.
constexpr std::array<Preset, 7> kPresets{{
    {100e3, 2.5e-2, 23e-6, 2e-6},
    {200e3, 1.5e-1, 12e-6, 2e-6},
    {300e3, 8e-2, 8e-6, 1e-6},
    {600e3, 1.1, 4e-6, 2e-6},
    {700e3, 1.5, 3e-6, 2e-6},
    {900e3, 2.0, 2.6e-6, 2e-6},
    {1100e3, 3.2, 2.3e-6, 2e-6},
}};

const Preset* find_preset(double f0) {
  for (const auto& p : kPresets)
    if (std::abs(p.f0 - f0) <= 1e-9 * p.f0) return &p;
  return nullptr;
}

}  // namespace

double pulse_value(const PulseParams& p, double t) {
  const double arg = (t - p.T0) / p.T;
  return p.phi * std::sin(2.0 * M_PI * p.f0 * t) * std::exp(-p.alpha * arg * arg);
}

PulseParams pulse_for_frequency(double f0) {
  const Preset* p = find_preset(f0);
  if (!p)
    throw InvalidArgumentError("pulse_for_frequency: no preset for f0 = " +
                               std::to_string(f0) + " Hz");
  PulseParams out;
  out.f0 = p->f0;
  out.phi = 1e-3;
  out.T0 = p->T0;
  out.T = p->T;
  out.alpha = p->alpha;
  return out;
}

bool has_pulse_preset(double f0) { return find_preset(f0) != nullptr; }

}  // namespace pw
