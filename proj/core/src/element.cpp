#include "platewave/element.hpp"

#include <cmath>

#include "platewave/errors.hpp"
#include "platewave/quadrature.hpp"
#include "platewave/shape.hpp"

namespace pw {

ElementKernel element_kernel(const std::array<Vec2, 3>& c, int k) {
  if (k != 1 && k != 2)
    throw InvalidArgumentError("element_kernel: degree must be 1 or 2");

  const double j11 = c[1].x - c[0].x, j12 = c[2].x - c[0].x;
  const double j21 = c[1].y - c[0].y, j22 = c[2].y - c[0].y;
  const double det = j11 * j22 - j12 * j21;
  if (!(det > 0.0) || !std::isfinite(det))
    throw DegenerateElementError("element_kernel: triangle has non-positive area");
  const double area = 0.5 * det;

  const int m = (k == 1) ? 3 : 6;
  ElementKernel ker;
  ker.count = m;
  ker.mass = Eigen::MatrixXd::Zero(m, m);
  ker.shear = Eigen::MatrixXd::Zero(2 * m, 2 * m);
  ker.divdiv = Eigen::MatrixXd::Zero(2 * m, 2 * m);

  const TriangleRule& rule = triangle_rule(2 * k);
  Eigen::VectorXd N(m);
  Eigen::VectorXd gx(m), gy(m);

  for (std::size_t q = 0; q < rule.size(); ++q) {
    const ShapeEval s = shape_values(k, rule.points[q]);
    const double w = rule.weights[q] * area;

    for (int r = 0; r < m; ++r) {
      N[r] = s.values[r];
      // physical gradients: grad_x phi = J^{-T} grad_ref phi
      gx[r] = (s.gradients[r][0] * j22 - s.gradients[r][1] * j21) / det;
      gy[r] = (-s.gradients[r][0] * j12 + s.gradients[r][1] * j11) / det;
    }

    ker.mass.noalias() += w * N * N.transpose();

    for (int r = 0; r < m; ++r) {
      for (int j = 0; j < m; ++j) {
        const double xx = gx[r] * gx[j];
        const double yy = gy[r] * gy[j];
        const double xy = gx[r] * gy[j];  // component pairing (x-basis r, y-basis j)
        const double yx = gy[r] * gx[j];
        // S((phi,0)) = [[gx, gy/2], [gy/2, 0]], S((0,phi)) = [[0, gx/2], [gx/2, gy]]
        ker.shear(2 * r, 2 * j) += w * (xx + 0.5 * yy);
        ker.shear(2 * r, 2 * j + 1) += w * 0.5 * yx;
        ker.shear(2 * r + 1, 2 * j) += w * 0.5 * xy;
        ker.shear(2 * r + 1, 2 * j + 1) += w * (0.5 * xx + yy);
        // div (phi,0) = gx, div (0,phi) = gy
        ker.divdiv(2 * r, 2 * j) += w * xx;
        ker.divdiv(2 * r, 2 * j + 1) += w * xy;
        ker.divdiv(2 * r + 1, 2 * j) += w * yx;
        ker.divdiv(2 * r + 1, 2 * j + 1) += w * yy;
      }
    }
  }
  return ker;
}

}  // namespace pw
