#pragma once

#include <array>

#include "platewave/errors.hpp"

namespace pw {

/// Values and reference-coordinate gradients of the local Lagrange basis at
/// one barycentric point. Gradients are taken with respect to (xi, eta)
/// where bary = (1-xi-eta, xi, eta). Local node order: three vertices, then
/// for degree 2 the midpoints of edges (0,1), (1,2), (2,0).
struct ShapeEval {
  int count = 0;
  std::array<double, 6> values{};
  std::array<std::array<double, 2>, 6> gradients{};
};

/// Evaluate the degree-k basis (k = 1 or 2) at a barycentric point.
/// The components must be in [0,1] and sum to 1.
ShapeEval shape_values(int k, const std::array<double, 3>& bary);

}  // namespace pw
