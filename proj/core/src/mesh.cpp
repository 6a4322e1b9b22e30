#include "platewave/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <ostream>
#include <utility>

namespace pw {

namespace {

int tag_number(Boundary b) {
  switch (b) {
    case Boundary::Bottom: return 1;
    case Boundary::Right: return 2;
    case Boundary::Top: return 3;
    case Boundary::Left: return 4;
  }
  return 0;
}

}  // namespace

Mesh build_structured_mesh(const PlateGeometry& geom, int ny) {
  geom.validate();
  if (ny < 1) throw InvalidArgumentError("build_structured_mesh: ny must be >= 1");

  Mesh mesh;
  mesh.geom = geom;
  mesh.ny = ny;
  // Shave one ulp-scale factor before ceil so that exact integer ratios
  // (e.g. Lx/Ly = 50) do not round up from representation error.
  const double ratio = static_cast<double>(ny) * geom.Lx / geom.Ly;
  mesh.nx = static_cast<int>(std::ceil(ratio * (1.0 - 1e-12)));
  if (mesh.nx < 1) mesh.nx = 1;

  const int nx = mesh.nx;
  const double hx = geom.Lx / nx;
  const double hy = geom.Ly / ny;
  mesh.h = std::hypot(hx, hy);  // the cell diagonal is the longest edge

  mesh.vertices.reserve(static_cast<std::size_t>(nx + 1) * (ny + 1));
  for (int j = 0; j <= ny; ++j) {
    const double y = geom.Ly * j / ny;
    for (int i = 0; i <= nx; ++i) {
      mesh.vertices.push_back({geom.Lx * i / nx, y});
    }
  }

  mesh.triangles.reserve(static_cast<std::size_t>(2) * nx * ny);
  for (int j = 0; j < ny; ++j) {
    for (int i = 0; i < nx; ++i) {
      const int v00 = mesh.vertex_id(i, j);
      const int v10 = mesh.vertex_id(i + 1, j);
      const int v01 = mesh.vertex_id(i, j + 1);
      const int v11 = mesh.vertex_id(i + 1, j + 1);
      mesh.triangles.push_back({v00, v10, v11});
      mesh.triangles.push_back({v00, v11, v01});
    }
  }

  mesh.boundary_edges.reserve(static_cast<std::size_t>(2) * (nx + ny));
  for (int i = 0; i < nx; ++i) {
    mesh.boundary_edges.push_back({mesh.vertex_id(i, 0), mesh.vertex_id(i + 1, 0), Boundary::Bottom});
    mesh.boundary_edges.push_back({mesh.vertex_id(i, ny), mesh.vertex_id(i + 1, ny), Boundary::Top});
  }
  for (int j = 0; j < ny; ++j) {
    mesh.boundary_edges.push_back({mesh.vertex_id(0, j), mesh.vertex_id(0, j + 1), Boundary::Left});
    mesh.boundary_edges.push_back({mesh.vertex_id(nx, j), mesh.vertex_id(nx, j + 1), Boundary::Right});
  }
  return mesh;
}

NodeSet enumerate_nodes(const Mesh& mesh, int k) {
  if (k != 1 && k != 2)
    throw InvalidArgumentError("enumerate_nodes: degree must be 1 or 2");

  NodeSet nodes;
  nodes.degree = k;
  nodes.nodes = mesh.vertices;

  const int cols = mesh.nx + 1;
  auto grid_i = [cols](int v) { return v % cols; };
  auto grid_j = [cols](int v) { return v / cols; };

  nodes.tri_nodes.resize(mesh.triangles.size());
  for (std::size_t t = 0; t < mesh.triangles.size(); ++t) {
    const auto& tri = mesh.triangles[t];
    nodes.tri_nodes[t] = {tri[0], tri[1], tri[2], -1, -1, -1};
  }

  if (k == 2) {
    // Unique edges keyed by sorted vertex pair; midpoints are then ordered
    // lexicographically by (y, x) using exact integer half-grid coordinates.
    std::map<std::pair<int, int>, int> edge_index;
    std::vector<std::pair<int, int>> edges;
    for (const auto& tri : mesh.triangles) {
      for (int e = 0; e < 3; ++e) {
        int a = tri[e], b = tri[(e + 1) % 3];
        if (a > b) std::swap(a, b);
        if (edge_index.emplace(std::make_pair(a, b), 0).second)
          edges.emplace_back(a, b);
      }
    }
    auto midpoint_key = [&](const std::pair<int, int>& e) {
      return std::make_pair(grid_j(e.first) + grid_j(e.second),
                            grid_i(e.first) + grid_i(e.second));
    };
    std::sort(edges.begin(), edges.end(), [&](const auto& a, const auto& b) {
      return midpoint_key(a) < midpoint_key(b);
    });

    const int nv = mesh.vertex_count();
    nodes.nodes.reserve(nv + edges.size());
    for (std::size_t e = 0; e < edges.size(); ++e) {
      const auto [a, b] = edges[e];
      edge_index[edges[e]] = nv + static_cast<int>(e);
      nodes.nodes.push_back({0.5 * (mesh.vertices[a].x + mesh.vertices[b].x),
                             0.5 * (mesh.vertices[a].y + mesh.vertices[b].y)});
    }

    for (std::size_t t = 0; t < mesh.triangles.size(); ++t) {
      const auto& tri = mesh.triangles[t];
      for (int e = 0; e < 3; ++e) {
        int a = tri[e], b = tri[(e + 1) % 3];
        if (a > b) std::swap(a, b);
        nodes.tri_nodes[t][3 + e] = edge_index.at({a, b});
      }
    }
  }

  const double tol = boundary_tol(mesh.geom);
  for (int n = 0; n < nodes.node_count(); ++n) {
    if (std::abs(nodes.nodes[n].x) <= tol) nodes.dirichlet_nodes.push_back(n);
  }
  return nodes;
}

TriangleHit locate_point(const Mesh& mesh, double x, double y) {
  const double tol = 1e-9 * std::max(mesh.geom.Lx, mesh.geom.Ly);
  if (x < -tol || x > mesh.geom.Lx + tol || y < -tol || y > mesh.geom.Ly + tol)
    throw OutOfDomainError("locate_point: point outside the plate");

  const double hx = mesh.geom.Lx / mesh.nx;
  const double hy = mesh.geom.Ly / mesh.ny;
  int ix = std::clamp(static_cast<int>(std::floor(x / hx)), 0, mesh.nx - 1);
  int iy = std::clamp(static_cast<int>(std::floor(y / hy)), 0, mesh.ny - 1);
  const double fx = x / hx - ix;
  const double fy = y / hy - iy;

  // Cells are split along the v00 -> v11 diagonal: the lower triangle covers
  // fy <= fx, the upper one the rest.
  const int cell = 2 * (iy * mesh.nx + ix);
  const int t = (fy <= fx) ? cell : cell + 1;

  const auto& tri = mesh.triangles[t];
  const Vec2& p0 = mesh.vertices[tri[0]];
  const Vec2& p1 = mesh.vertices[tri[1]];
  const Vec2& p2 = mesh.vertices[tri[2]];
  const double det = (p1.x - p0.x) * (p2.y - p0.y) - (p2.x - p0.x) * (p1.y - p0.y);
  const double l1 = ((x - p0.x) * (p2.y - p0.y) - (p2.x - p0.x) * (y - p0.y)) / det;
  const double l2 = ((p1.x - p0.x) * (y - p0.y) - (x - p0.x) * (p1.y - p0.y)) / det;
  return TriangleHit{t, {1.0 - l1 - l2, l1, l2}};
}

void export_mesh_text(const Mesh& mesh, std::ostream& os) {
  os << mesh.vertex_count() << ' ' << mesh.triangle_count() << '\n';
  const double tol = boundary_tol(mesh.geom);
  for (const auto& v : mesh.vertices) {
    const auto tag = boundary_tag_of(v.x, v.y, mesh.geom, tol);
    os << v.x << ' ' << v.y << ' ' << (tag ? tag_number(*tag) : 0) << '\n';
  }
  for (const auto& t : mesh.triangles)
    os << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
}

}  // namespace pw
