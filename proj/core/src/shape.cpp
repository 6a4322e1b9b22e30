#include "platewave/shape.hpp"

#include <cmath>

namespace pw {

ShapeEval shape_values(int k, const std::array<double, 3>& bary) {
  if (k != 1 && k != 2)
    throw InvalidArgumentError("shape_values: degree must be 1 or 2");
  const double l1 = bary[0], l2 = bary[1], l3 = bary[2];
  const double tol = 1e-9;
  if (std::abs(l1 + l2 + l3 - 1.0) > tol || l1 < -tol || l2 < -tol || l3 < -tol ||
      l1 > 1.0 + tol || l2 > 1.0 + tol || l3 > 1.0 + tol)
    throw InvalidArgumentError("shape_values: invalid barycentric coordinates");

  ShapeEval s;
  if (k == 1) {
    s.count = 3;
    s.values = {l1, l2, l3};
    s.gradients[0] = {-1.0, -1.0};
    s.gradients[1] = {1.0, 0.0};
    s.gradients[2] = {0.0, 1.0};
    return s;
  }

  s.count = 6;
  s.values = {l1 * (2.0 * l1 - 1.0), l2 * (2.0 * l2 - 1.0), l3 * (2.0 * l3 - 1.0),
              4.0 * l1 * l2, 4.0 * l2 * l3, 4.0 * l3 * l1};
  s.gradients[0] = {-(4.0 * l1 - 1.0), -(4.0 * l1 - 1.0)};
  s.gradients[1] = {4.0 * l2 - 1.0, 0.0};
  s.gradients[2] = {0.0, 4.0 * l3 - 1.0};
  s.gradients[3] = {4.0 * (l1 - l2), -4.0 * l2};
  s.gradients[4] = {4.0 * l3, 4.0 * l2};
  s.gradients[5] = {-4.0 * l3, 4.0 * (l1 - l3)};
  return s;
}

}  // namespace pw
