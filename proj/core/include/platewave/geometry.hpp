#pragma once

#include <cmath>
#include <optional>

#include "platewave/errors.hpp"

namespace pw {

/// Rectangular plate [0,Lx] x [0,Ly]; x is the propagation direction,
/// y runs across the thickness.
struct PlateGeometry {
  double Lx = 5.0e-2;
  double Ly = 1.0e-3;

  void validate() const {
    if (!(Lx > 0.0) || !(Ly > 0.0) || !std::isfinite(Lx) || !std::isfinite(Ly))
      throw InvalidArgumentError("PlateGeometry: Lx and Ly must be positive and finite");
  }
};

/// The four plate boundaries. The pulse is driven on the left edge (x=0);
/// the other three edges are traction free.
enum class Boundary { Bottom, Right, Top, Left };

/// Classify a point against the plate boundary within tolerance `tol`.
/// Corners resolve with precedence Left > Right > Bottom > Top, so the
/// driven edge owns its corners. Interior points yield nullopt.
inline std::optional<Boundary> boundary_tag_of(double x, double y,
                                               const PlateGeometry& geom,
                                               double tol) {
  if (tol < 0.0) throw InvalidArgumentError("boundary_tag_of: tol must be >= 0");
  if (std::abs(x) <= tol) return Boundary::Left;
  if (std::abs(x - geom.Lx) <= tol) return Boundary::Right;
  if (std::abs(y) <= tol) return Boundary::Bottom;
  if (std::abs(y - geom.Ly) <= tol) return Boundary::Top;
  return std::nullopt;
}

/// Default boundary-detection tolerance: structured coordinates are exact
/// grid multiples, the tolerance only guards rounding.
inline double boundary_tol(const PlateGeometry& geom) {
  return 1e-12 * std::max(geom.Lx, geom.Ly);
}

}  // namespace pw
