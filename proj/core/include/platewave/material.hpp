#pragma once

#include <cmath>

#include "platewave/errors.hpp"

namespace pw {

/// Isotropic linear-elastic material. Both Lame constants and the
/// engineering pair (E, nu) are carried; they must agree to 0.1%.
struct MaterialParams {
  double rho = 0.0;     ///< density, kg/m^3
  double lambda = 0.0;  ///< first Lame constant, Pa
  double mu = 0.0;      ///< shear modulus, Pa
  double E = 0.0;       ///< Young's modulus, Pa
  double nu = 0.0;      ///< Poisson ratio

  void validate() const {
    if (!(rho > 0.0) || !(mu > 0.0) || !(lambda > 0.0))
      throw InvalidArgumentError("MaterialParams: rho, mu, lambda must be positive");
    if (!(nu > -1.0) || !(nu < 0.5))
      throw InvalidArgumentError("MaterialParams: Poisson ratio must lie in (-1, 0.5)");
    const double lambda_from_E = E * nu / ((1.0 + nu) * (1.0 - 2.0 * nu));
    const double mu_from_E = E / (2.0 * (1.0 + nu));
    if (std::abs(lambda - lambda_from_E) / lambda >= 1e-3)
      throw InvalidArgumentError("MaterialParams: lambda disagrees with E, nu");
    if (std::abs(mu - mu_from_E) / mu >= 1e-3)
      throw InvalidArgumentError("MaterialParams: mu disagrees with E, nu");
  }

  /// Derive the Lame constants from (rho, E, nu).
  static MaterialParams from_engineering(double rho, double E, double nu) {
    MaterialParams m;
    m.rho = rho;
    m.E = E;
    m.nu = nu;
    m.lambda = E * nu / ((1.0 + nu) * (1.0 - 2.0 * nu));
    m.mu = E / (2.0 * (1.0 + nu));
    m.validate();
    return m;
  }

  /// Aluminium plate constants used throughout the experiments.
  static MaterialParams aluminium() {
    MaterialParams m;
    m.rho = 2700.0;
    m.E = 7.0e10;
    m.nu = 0.334;
    m.mu = 2.624e10;
    m.lambda = 5.279e10;
    m.validate();
    return m;
  }
};

}  // namespace pw
