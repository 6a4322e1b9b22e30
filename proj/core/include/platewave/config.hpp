#pragma once

#include <string>
#include <vector>

#include "platewave/geometry.hpp"
#include "platewave/material.hpp"
#include "platewave/pulse.hpp"
#include "platewave/simulation.hpp"

namespace pw {

/// Full experiment description. Defaults reproduce the standard aluminium
/// setup: 5 cm x 1 mm plate, 600 kHz pulse, 150 steps of 1e-7 s, quadratic
/// elements on the ny = 4 mesh, four probes on the top face.
struct RunConfig {
  PlateGeometry geometry{};
  MaterialParams material = MaterialParams::aluminium();
  PulseParams pulse = pulse_for_frequency(600e3);
  TimeGrid grid{1.5e-5, 150};
  int degree = 2;
  int ny = 4;
  std::vector<double> probes{1.0e-2, 1.3e-2, 1.6e-2, 1.9e-2};
  std::string output_dir = "out";

  void validate() const;
};

/// Parse the nested key-value config text (INI-style sections geometry,
/// material, pulse, time, fem, probes, output; '#' comments). Unknown
/// sections or keys are rejected. Missing keys keep their defaults.
RunConfig parse_config(const std::string& text);

/// Read and parse a config file.
RunConfig load_config(const std::string& path);

}  // namespace pw
