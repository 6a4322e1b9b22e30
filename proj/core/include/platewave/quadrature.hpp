#pragma once

#include <array>
#include <vector>

namespace pw {

/// Quadrature rule on the reference triangle in barycentric coordinates.
/// Weights sum to one; multiply by the physical triangle area.
struct TriangleRule {
  std::vector<std::array<double, 3>> points;
  std::vector<double> weights;

  std::size_t size() const { return points.size(); }
};

/// Symmetric rule exact for all polynomials up to `degree`. Degrees 2 and 4
/// use compact symmetric rules; higher degrees fall back to a collapsed
/// Gauss-Legendre product rule.
const TriangleRule& triangle_rule(int degree);

}  // namespace pw
