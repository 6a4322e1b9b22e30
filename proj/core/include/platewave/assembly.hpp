#pragma once

#include <Eigen/Sparse>
#include <functional>
#include <iosfwd>
#include <utility>
#include <vector>

#include "platewave/material.hpp"
#include "platewave/mesh.hpp"

namespace pw {

/// Raw global operators over interleaved dofs (node j owns dofs 2j and
/// 2j+1), assembled without boundary handling. Full symmetric pattern.
struct GlobalOperators {
  Eigen::SparseMatrix<double> mass;    ///< vector mass, no density factor
  Eigen::SparseMatrix<double> shear;   ///< strain-strain stiffness, no material factor
  Eigen::SparseMatrix<double> divdiv;  ///< div-div stiffness, no material factor
};

/// The per-(mesh, dt) system: A = rho*M + dt^2*(2mu*K_shear + lambda*K_div)
/// with Dirichlet rows/columns eliminated symmetrically (unit diagonal,
/// prescribed values moved to the right-hand side). Only the upper
/// triangle of A is stored. Immutable after construction.
struct AssembledSystem {
  Eigen::SparseMatrix<double> A;        ///< eliminated system, upper triangle
  Eigen::SparseMatrix<double> M;        ///< raw vector mass operator, full pattern
  std::vector<int> dirichlet_nodes;     ///< node ids on the driven edge
  std::vector<int> dirichlet_dofs;      ///< both dofs of each Dirichlet node, sorted
  Eigen::VectorXd dirichlet_coupling;   ///< free-dof response to a unit u_y boundary value
  double dt = 0.0;

  int order() const { return static_cast<int>(A.rows()); }
};

/// Assemble the raw operators (no material coefficients, no boundary
/// handling).
GlobalOperators assemble_operators(const Mesh& mesh, const NodeSet& nodes);

/// Combine the raw operators into the full (uneliminated) system matrix.
Eigen::SparseMatrix<double> combine_system(const GlobalOperators& ops,
                                           const MaterialParams& mat, double dt);

/// Assemble the complete solvable system for one (mesh, dt) pair.
AssembledSystem assemble(const Mesh& mesh, const NodeSet& nodes,
                         const MaterialParams& mat, double dt);

/// Load vector b = rho * M * (2 d_prev - d_prev2); Dirichlet entries are
/// zeroed (the boundary value is injected by apply_boundary_value).
Eigen::VectorXd assemble_load(const AssembledSystem& sys,
                              const Eigen::VectorXd& d_prev,
                              const Eigen::VectorXd& d_prev2, double rho);

/// Inject the boundary value g of the current step: subtract the coupling
/// of the prescribed values into free rows and pin (0, g) on the Dirichlet
/// dofs of b.
void apply_boundary_value(const AssembledSystem& sys, Eigen::VectorXd& b, double g);

/// A smooth vector field with closed-form derivatives, used for the
/// integration-by-parts consistency check. jacobian returns
/// (ux_x, ux_y, uy_x, uy_y); second returns
/// (ux_xx, ux_xy, ux_yy, uy_xx, uy_xy, uy_yy).
struct SmoothField {
  std::function<std::array<double, 2>(double, double)> value;
  std::function<std::array<double, 4>(double, double)> jacobian;
  std::function<std::array<double, 6>(double, double)> second;
};

/// Quadrature evaluation of both sides of the integration-by-parts
/// identity: lhs = -integral (div sigma(u)) . v, rhs = 2mu integral
/// S(u):S(v) + lambda integral (div u)(div v). They agree when v vanishes
/// on the driven edge and sigma(u).n vanishes on the free edges.
std::pair<double, double> strong_form_residual(const Mesh& mesh,
                                               const MaterialParams& mat,
                                               const SmoothField& u,
                                               const SmoothField& v,
                                               int quad_degree);

/// Coordinate-format dump `row col value` (0-based) of the stored entries.
void dump_matrix(const Eigen::SparseMatrix<double>& m, std::ostream& os);

}  // namespace pw
