#include "platewave/assembly.hpp"

#include <algorithm>
#include <ostream>

#include "platewave/element.hpp"
#include "platewave/errors.hpp"
#include "platewave/quadrature.hpp"

namespace pw {

namespace {

std::array<Vec2, 3> corner_coords(const Mesh& mesh, std::size_t t) {
  const auto& tri = mesh.triangles[t];
  return {mesh.vertices[tri[0]], mesh.vertices[tri[1]], mesh.vertices[tri[2]]};
}

}  // namespace

GlobalOperators assemble_operators(const Mesh& mesh, const NodeSet& nodes) {
  if (nodes.tri_nodes.size() != mesh.triangles.size())
    throw InvalidArgumentError("assemble_operators: mesh and nodes disagree");

  const int n = nodes.system_order();
  const int m = nodes.local_size();

  std::vector<Eigen::Triplet<double>> tm, ts, td;
  const std::size_t per_elem = static_cast<std::size_t>(2 * m) * (2 * m);
  tm.reserve(per_elem * mesh.triangles.size());
  ts.reserve(per_elem * mesh.triangles.size());
  td.reserve(per_elem * mesh.triangles.size());

  for (std::size_t t = 0; t < mesh.triangles.size(); ++t) {
    const ElementKernel ker = element_kernel(corner_coords(mesh, t), nodes.degree);
    const auto& loc = nodes.tri_nodes[t];
    for (int r = 0; r < m; ++r) {
      for (int j = 0; j < m; ++j) {
        const int gr = loc[r], gj = loc[j];
        const double mrj = ker.mass(r, j);
        tm.emplace_back(2 * gr, 2 * gj, mrj);
        tm.emplace_back(2 * gr + 1, 2 * gj + 1, mrj);
        for (int a = 0; a < 2; ++a) {
          for (int b = 0; b < 2; ++b) {
            ts.emplace_back(2 * gr + a, 2 * gj + b, ker.shear(2 * r + a, 2 * j + b));
            td.emplace_back(2 * gr + a, 2 * gj + b, ker.divdiv(2 * r + a, 2 * j + b));
          }
        }
      }
    }
  }

  GlobalOperators ops;
  ops.mass.resize(n, n);
  ops.shear.resize(n, n);
  ops.divdiv.resize(n, n);
  ops.mass.setFromTriplets(tm.begin(), tm.end());
  ops.shear.setFromTriplets(ts.begin(), ts.end());
  ops.divdiv.setFromTriplets(td.begin(), td.end());
  return ops;
}

Eigen::SparseMatrix<double> combine_system(const GlobalOperators& ops,
                                           const MaterialParams& mat, double dt) {
  if (!(dt > 0.0)) throw InvalidArgumentError("combine_system: dt must be positive");
  const double dt2 = dt * dt;
  Eigen::SparseMatrix<double> A =
      mat.rho * ops.mass + (2.0 * mat.mu * dt2) * ops.shear + (mat.lambda * dt2) * ops.divdiv;
  return A;
}

AssembledSystem assemble(const Mesh& mesh, const NodeSet& nodes,
                         const MaterialParams& mat, double dt) {
  const GlobalOperators ops = assemble_operators(mesh, nodes);
  Eigen::SparseMatrix<double> A = combine_system(ops, mat, dt);
  const int n = nodes.system_order();

  AssembledSystem sys;
  sys.dt = dt;
  sys.M = ops.mass;
  sys.dirichlet_nodes = nodes.dirichlet_nodes;
  for (int node : nodes.dirichlet_nodes) {
    sys.dirichlet_dofs.push_back(2 * node);
    sys.dirichlet_dofs.push_back(2 * node + 1);
  }
  std::sort(sys.dirichlet_dofs.begin(), sys.dirichlet_dofs.end());

  std::vector<char> is_dirichlet(n, 0);
  for (int d : sys.dirichlet_dofs) is_dirichlet[d] = 1;

  // Free-dof response to a unit u_y value on every Dirichlet node: one
  // matvec against the raw columns, taken before elimination. The pulse
  // prescribes the same g on the whole edge, so a single vector suffices.
  Eigen::VectorXd unit_uy = Eigen::VectorXd::Zero(n);
  for (int node : nodes.dirichlet_nodes) unit_uy[2 * node + 1] = 1.0;
  sys.dirichlet_coupling = A * unit_uy;
  for (int d : sys.dirichlet_dofs) sys.dirichlet_coupling[d] = 0.0;

  // Symmetric elimination: zero Dirichlet rows and columns, unit diagonal.
  for (int col = 0; col < A.outerSize(); ++col) {
    for (Eigen::SparseMatrix<double>::InnerIterator it(A, col); it; ++it) {
      if (is_dirichlet[it.row()] || is_dirichlet[it.col()])
        it.valueRef() = (it.row() == it.col()) ? 1.0 : 0.0;
    }
  }
  A.prune(0.0);
  sys.A = A.triangularView<Eigen::Upper>();
  return sys;
}

Eigen::VectorXd assemble_load(const AssembledSystem& sys,
                              const Eigen::VectorXd& d_prev,
                              const Eigen::VectorXd& d_prev2, double rho) {
  const int n = sys.order();
  if (d_prev.size() != n || d_prev2.size() != n)
    throw InvalidArgumentError("assemble_load: snapshot length does not match system order");
  Eigen::VectorXd b = rho * (sys.M * (2.0 * d_prev - d_prev2));
  for (int d : sys.dirichlet_dofs) b[d] = 0.0;
  return b;
}

void apply_boundary_value(const AssembledSystem& sys, Eigen::VectorXd& b, double g) {
  if (b.size() != sys.order())
    throw InvalidArgumentError("apply_boundary_value: vector length mismatch");
  if (g != 0.0) b.noalias() -= g * sys.dirichlet_coupling;
  for (int node : sys.dirichlet_nodes) {
    b[2 * node] = 0.0;
    b[2 * node + 1] = g;
  }
}

std::pair<double, double> strong_form_residual(const Mesh& mesh,
                                               const MaterialParams& mat,
                                               const SmoothField& u,
                                               const SmoothField& v,
                                               int quad_degree) {
  const TriangleRule& rule = triangle_rule(quad_degree);
  const double lam = mat.lambda, mu = mat.mu;
  double lhs = 0.0, rhs = 0.0;

  for (std::size_t t = 0; t < mesh.triangles.size(); ++t) {
    const auto c = corner_coords(mesh, t);
    const double det = (c[1].x - c[0].x) * (c[2].y - c[0].y) -
                       (c[2].x - c[0].x) * (c[1].y - c[0].y);
    const double area = 0.5 * det;
    for (std::size_t q = 0; q < rule.size(); ++q) {
      const auto& l = rule.points[q];
      const double x = l[0] * c[0].x + l[1] * c[1].x + l[2] * c[2].x;
      const double y = l[0] * c[0].y + l[1] * c[1].y + l[2] * c[2].y;
      const double w = rule.weights[q] * area;

      const auto uj = u.jacobian(x, y);
      const auto us = u.second(x, y);
      const auto vv = v.value(x, y);
      const auto vj = v.jacobian(x, y);

      // div sigma(u) from second derivatives
      const double dsx = (lam + 2.0 * mu) * us[0] + mu * us[2] + (lam + mu) * us[4];
      const double dsy = (lam + mu) * us[1] + mu * us[3] + (lam + 2.0 * mu) * us[5];
      lhs -= w * (dsx * vv[0] + dsy * vv[1]);

      const double suv = uj[0] * vj[0] + uj[3] * vj[3] +
                         0.5 * (uj[1] + uj[2]) * (vj[1] + vj[2]);
      const double divu = uj[0] + uj[3];
      const double divv = vj[0] + vj[3];
      rhs += w * (2.0 * mu * suv + lam * divu * divv);
    }
  }
  return {lhs, rhs};
}

void dump_matrix(const Eigen::SparseMatrix<double>& m, std::ostream& os) {
  for (int col = 0; col < m.outerSize(); ++col)
    for (Eigen::SparseMatrix<double>::InnerIterator it(m, col); it; ++it)
      os << it.row() << ' ' << it.col() << ' ' << it.value() << '\n';
}

}  // namespace pw
