#include "platewave/study.hpp"

#include <algorithm>
#include <cmath>

#include "platewave/errors.hpp"
#include "platewave/quadrature.hpp"
#include "platewave/shape.hpp"

namespace pw {

double l2_error_between(const Mesh& coarse_mesh, const NodeSet& coarse_nodes,
                        const Eigen::VectorXd& coarse_d, const Mesh& fine_mesh,
                        const NodeSet& fine_nodes, const Eigen::VectorXd& fine_d,
                        std::pair<double, double> window) {
  if (std::abs(coarse_mesh.geom.Lx - fine_mesh.geom.Lx) > 1e-15 ||
      std::abs(coarse_mesh.geom.Ly - fine_mesh.geom.Ly) > 1e-15)
    throw InvalidArgumentError("l2_error_between: meshes describe different plates");
  if (coarse_d.size() != coarse_nodes.system_order() ||
      fine_d.size() != fine_nodes.system_order())
    throw InvalidArgumentError("l2_error_between: coefficient length mismatch");
  const auto [x_lo, x_hi] = window;
  if (!(x_hi > x_lo)) throw InvalidArgumentError("l2_error_between: empty window");

  const TriangleRule& rule = triangle_rule(2 * fine_nodes.degree + 2);
  double acc = 0.0;

  for (std::size_t t = 0; t < fine_mesh.triangles.size(); ++t) {
    const auto& tri = fine_mesh.triangles[t];
    const Vec2& c0 = fine_mesh.vertices[tri[0]];
    const Vec2& c1 = fine_mesh.vertices[tri[1]];
    const Vec2& c2 = fine_mesh.vertices[tri[2]];
    const double tx_lo = std::min({c0.x, c1.x, c2.x});
    const double tx_hi = std::max({c0.x, c1.x, c2.x});
    if (tx_hi < x_lo || tx_lo > x_hi) continue;

    const double det = (c1.x - c0.x) * (c2.y - c0.y) - (c2.x - c0.x) * (c1.y - c0.y);
    const double area = 0.5 * det;
    const auto& loc = fine_nodes.tri_nodes[t];

    for (std::size_t q = 0; q < rule.size(); ++q) {
      const auto& l = rule.points[q];
      const double x = l[0] * c0.x + l[1] * c1.x + l[2] * c2.x;
      if (x < x_lo || x > x_hi) continue;
      const double y = l[0] * c0.y + l[1] * c1.y + l[2] * c2.y;

      const ShapeEval s = shape_values(fine_nodes.degree, l);
      double fx = 0.0, fy = 0.0;
      for (int r = 0; r < s.count; ++r) {
        fx += s.values[r] * fine_d[2 * loc[r]];
        fy += s.values[r] * fine_d[2 * loc[r] + 1];
      }
      const auto cu = evaluate_field(coarse_mesh, coarse_nodes, coarse_d, x, y);
      const double dx = fx - cu[0], dy = fy - cu[1];
      acc += rule.weights[q] * area * (dx * dx + dy * dy);
    }
  }
  return std::sqrt(acc);
}

double fit_log_slope(const std::vector<double>& h, const std::vector<double>& e) {
  if (h.size() != e.size() || h.size() < 2)
    throw InvalidArgumentError("fit_log_slope: need matching lists of >= 2 points");
  const std::size_t n = h.size();
  double sx = 0.0, sy = 0.0;
  std::vector<double> lx(n), ly(n);
  for (std::size_t i = 0; i < n; ++i) {
    lx[i] = std::log(h[i]);
    ly[i] = std::log(e[i]);
    sx += lx[i];
    sy += ly[i];
  }
  const double xbar = sx / n, ybar = sy / n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (lx[i] - xbar) * (lx[i] - xbar);
    sxy += (lx[i] - xbar) * (ly[i] - ybar);
  }
  if (sxx == 0.0) throw InvalidArgumentError("fit_log_slope: degenerate h list");
  return sxy / sxx;
}

Eigen::VectorXd snapshot_at_time(const SimResult& result, double t) {
  const double dt = result.grid.dt();
  const double s = t / dt;
  const int i0 = static_cast<int>(std::floor(s + 1e-9));
  const double theta = s - i0;

  auto find_step = [&](int step) -> const Eigen::VectorXd* {
    for (const auto& snap : result.snapshots)
      if (snap.step == step) return &snap.d;
    return nullptr;
  };

  const Eigen::VectorXd* d0 = find_step(i0);
  if (theta < 1e-9) {
    if (!d0) throw InvalidArgumentError("snapshot_at_time: step not recorded");
    return *d0;
  }
  const Eigen::VectorXd* d1 = find_step(i0 + 1);
  if (!d0 || !d1) throw InvalidArgumentError("snapshot_at_time: bracketing steps not recorded");
  return (1.0 - theta) * (*d0) + theta * (*d1);
}

ConvergenceResult convergence_study(const RunConfig& config,
                                    const std::vector<int>& ny_list,
                                    double t_compare,
                                    std::pair<double, double> window) {
  if (ny_list.size() < 3)
    throw InvalidArgumentError("convergence_study: need at least 3 mesh levels");
  for (std::size_t i = 0; i + 1 < ny_list.size(); ++i)
    if (ny_list[i] >= ny_list[i + 1])
      throw InvalidArgumentError("convergence_study: ny_list must be strictly increasing");
  if (!(t_compare > 0.0) || t_compare > config.grid.t_final)
    throw InvalidArgumentError("convergence_study: comparison time outside the grid");

  const double dt = config.grid.dt();
  const int step_lo = static_cast<int>(std::floor(t_compare / dt + 1e-9));
  const int step_hi = std::min(step_lo + 1, config.grid.steps);

  struct Level {
    Mesh mesh;
    NodeSet nodes;
    Eigen::VectorXd d;
  };
  std::vector<Level> levels;
  levels.reserve(ny_list.size());
  for (int ny : ny_list) {
    Level lv;
    lv.mesh = build_structured_mesh(config.geometry, ny);
    lv.nodes = enumerate_nodes(lv.mesh, config.degree);
    const SimResult sim = run_simulation(lv.mesh, lv.nodes, config.material, config.pulse,
                                         config.grid, {}, {step_lo, step_hi});
    lv.d = snapshot_at_time(sim, t_compare);
    levels.push_back(std::move(lv));
  }

  ConvergenceResult out;
  std::vector<double> hs, es;
  for (std::size_t j = 0; j + 1 < levels.size(); ++j) {
    const Level& coarse = levels[j];
    const Level& fine = levels[j + 1];
    ConvergenceRow row;
    row.ny = ny_list[j];
    row.h = coarse.mesh.h;
    row.dof = coarse.nodes.system_order();
    row.e_t = l2_error_between(coarse.mesh, coarse.nodes, coarse.d, fine.mesh,
                               fine.nodes, fine.d, window);
    out.rows.push_back(row);
    hs.push_back(row.h);
    es.push_back(row.e_t);
  }
  out.fitted_order = fit_log_slope(hs, es);
  return out;
}

}  // namespace pw
