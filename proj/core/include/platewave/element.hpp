#pragma once

#include <Eigen/Dense>
#include <array>

#include "platewave/mesh.hpp"

namespace pw {

/// Local matrices of one triangle for the bilinear form: the scalar mass
/// block and the strain and divergence stiffness blocks over interleaved
/// (u_x, u_y) dofs. All three are symmetric; mass is positive definite,
/// the stiffness blocks are positive semi-definite with the rigid-body
/// modes in their null space.
struct ElementKernel {
  int count = 0;               ///< scalar basis functions per element
  Eigen::MatrixXd mass;        ///< count x count, integral of phi_r phi_j
  Eigen::MatrixXd shear;       ///< 2count x 2count, integral of S(psi_r):S(psi_j)
  Eigen::MatrixXd divdiv;      ///< 2count x 2count, integral of (div psi_r)(div psi_j)
};

/// Integrate the element matrices over one triangle with exact quadrature
/// (degree 2k). Throws DegenerateElementError for non-positive area.
ElementKernel element_kernel(const std::array<Vec2, 3>& corners, int k);

}  // namespace pw
