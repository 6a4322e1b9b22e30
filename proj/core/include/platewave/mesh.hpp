#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "platewave/geometry.hpp"

namespace pw {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

struct BoundaryEdge {
  int v0 = -1;
  int v1 = -1;
  Boundary tag = Boundary::Bottom;
};

/// Structured triangulation of the plate: nx x ny square cells, each split
/// along the lower-left to upper-right diagonal. Triangles are
/// counter-clockwise.
struct Mesh {
  PlateGeometry geom;
  int nx = 0;  ///< vertex intervals along the length
  int ny = 0;  ///< vertex intervals across the thickness
  double h = 0.0;  ///< longest edge in the mesh
  std::vector<Vec2> vertices;
  std::vector<std::array<int, 3>> triangles;
  std::vector<BoundaryEdge> boundary_edges;

  int vertex_count() const { return static_cast<int>(vertices.size()); }
  int triangle_count() const { return static_cast<int>(triangles.size()); }

  /// Grid index of vertex (i, j), row-major with j (the y row) outermost.
  int vertex_id(int i, int j) const { return j * (nx + 1) + i; }
};

/// Result of locating a point: containing triangle plus its barycentric
/// coordinates there.
struct TriangleHit {
  int triangle = -1;
  std::array<double, 3> bary{};
};

/// Lagrange nodes of degree k on the mesh: vertices, plus edge midpoints
/// when k = 2. Node ordering is deterministic: vertices lexicographic by
/// (y, x), then midpoints lexicographic by (y, x).
struct NodeSet {
  int degree = 1;
  std::vector<Vec2> nodes;
  std::vector<int> dirichlet_nodes;            ///< nodes on the driven edge x=0
  std::vector<std::array<int, 6>> tri_nodes;   ///< per triangle; entries 3..5 are -1 for k=1

  int node_count() const { return static_cast<int>(nodes.size()); }
  int local_size() const { return degree == 1 ? 3 : 6; }
  /// Order of the assembled system: two displacement dofs per node.
  int system_order() const { return 2 * node_count(); }
};

/// Build the structured mesh with ny vertex intervals across the thickness
/// and nx = ceil(ny * Lx/Ly) along the length.
Mesh build_structured_mesh(const PlateGeometry& geom, int ny);

/// Enumerate degree-k Lagrange nodes. k must be 1 or 2.
NodeSet enumerate_nodes(const Mesh& mesh, int k);

/// Locate the triangle containing a point (grid walk on the structured
/// layout). Throws OutOfDomainError if the point lies outside the plate
/// beyond tolerance.
TriangleHit locate_point(const Mesh& mesh, double x, double y);

/// Plain-text mesh dump: header `nv nt`, one `x y tag` line per vertex
/// (0 for interior) and one `i j k` line per triangle, 0-based.
void export_mesh_text(const Mesh& mesh, std::ostream& os);

}  // namespace pw
