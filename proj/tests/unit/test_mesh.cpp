#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "platewave/mesh.hpp"

using namespace pw;

namespace {

double triangle_area(const Mesh& m, std::size_t t) {
  const auto& tri = m.triangles[t];
  const Vec2& a = m.vertices[tri[0]];
  const Vec2& b = m.vertices[tri[1]];
  const Vec2& c = m.vertices[tri[2]];
  return 0.5 * ((b.x - a.x) * (c.y - a.y) - (c.x - a.x) * (b.y - a.y));
}

double min_angle_deg(const Mesh& m, std::size_t t) {
  const auto& tri = m.triangles[t];
  double best = 180.0;
  for (int i = 0; i < 3; ++i) {
    const Vec2& p = m.vertices[tri[i]];
    const Vec2& a = m.vertices[tri[(i + 1) % 3]];
    const Vec2& b = m.vertices[tri[(i + 2) % 3]];
    const double ux = a.x - p.x, uy = a.y - p.y;
    const double vx = b.x - p.x, vy = b.y - p.y;
    const double cosang = (ux * vx + uy * vy) /
                          (std::hypot(ux, uy) * std::hypot(vx, vy));
    best = std::min(best, std::acos(std::clamp(cosang, -1.0, 1.0)) * 180.0 / M_PI);
  }
  return best;
}

}  // namespace

TEST_CASE("structured mesh matches the reference counts") {
  const PlateGeometry geom{5e-2, 1e-3};

  SUBCASE("ny = 2") {
    const Mesh m = build_structured_mesh(geom, 2);
    CHECK(m.nx == 100);
    CHECK(m.vertex_count() == 303);
    CHECK(m.triangle_count() == 400);
    CHECK(m.h == doctest::Approx(std::sqrt(2.0) * 1e-3 / 2.0).epsilon(1e-14));
    CHECK(m.h == doctest::Approx(7.07e-4).epsilon(1e-3));
  }
  SUBCASE("unit square, ny = 1") {
    const Mesh m = build_structured_mesh({1.0, 1.0}, 1);
    CHECK(m.nx == 1);
    CHECK(m.vertex_count() == 4);
    CHECK(m.triangle_count() == 2);
    CHECK(m.h == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  }
  SUBCASE("ny = 4") {
    const Mesh m = build_structured_mesh(geom, 4);
    CHECK(m.h == doctest::Approx(3.53e-4).epsilon(1e-2));
    const NodeSet n = enumerate_nodes(m, 1);
    CHECK(n.system_order() == 2010);
  }
}

TEST_CASE("mesh construction rejects invalid input") {
  CHECK_THROWS_AS(build_structured_mesh({5e-2, 1e-3}, 0), InvalidArgumentError);
  CHECK_THROWS_AS(build_structured_mesh({-1.0, 1e-3}, 2), InvalidArgumentError);
  CHECK_THROWS_AS(build_structured_mesh({1.0, 0.0}, 2), InvalidArgumentError);
}

TEST_CASE("node enumeration reproduces the dof formulas") {
  const PlateGeometry geom{5e-2, 1e-3};

  SUBCASE("table entries") {
    const Mesh m2 = build_structured_mesh(geom, 2);
    CHECK(enumerate_nodes(m2, 1).system_order() == 606);
    const NodeSet q2 = enumerate_nodes(m2, 2);
    CHECK(q2.system_order() == 2010);
    CHECK(q2.node_count() == 303 + 702);

    const Mesh m14 = build_structured_mesh(geom, 14);
    CHECK(enumerate_nodes(m14, 2).system_order() == 81258);
  }

  SUBCASE("closed forms for every level") {
    for (int ny = 1; ny <= 14; ++ny) {
      const Mesh m = build_structured_mesh(geom, ny);
      CHECK(enumerate_nodes(m, 1).system_order() == 100 * ny * ny + 102 * ny + 2);
      CHECK(enumerate_nodes(m, 2).system_order() == 400 * ny * ny + 204 * ny + 2);
    }
  }

  SUBCASE("unsupported degree") {
    const Mesh m = build_structured_mesh(geom, 2);
    CHECK_THROWS_AS(enumerate_nodes(m, 3), InvalidArgumentError);
    CHECK_THROWS_AS(enumerate_nodes(m, 0), InvalidArgumentError);
  }
}

TEST_CASE("boundary classification") {
  const PlateGeometry geom{5e-2, 1e-3};
  const double tol = boundary_tol(geom);

  CHECK(boundary_tag_of(0.0, 5e-4, geom, tol) == Boundary::Left);
  CHECK(boundary_tag_of(5e-2, 5e-4, geom, tol) == Boundary::Right);
  CHECK(boundary_tag_of(0.0, 0.0, geom, tol) == Boundary::Left);  // corner precedence
  CHECK(boundary_tag_of(5e-2, 0.0, geom, tol) == Boundary::Right);
  CHECK(boundary_tag_of(2e-2, 0.0, geom, tol) == Boundary::Bottom);
  CHECK(boundary_tag_of(2e-2, 1e-3, geom, tol) == Boundary::Top);
  CHECK(!boundary_tag_of(2e-2, 5e-4, geom, tol).has_value());
  CHECK_THROWS_AS(boundary_tag_of(0.0, 0.0, geom, -1.0), InvalidArgumentError);
}

TEST_CASE("area conservation and shape regularity") {
  const PlateGeometry geom{5e-2, 1e-3};
  for (int ny : {1, 2, 3, 5, 8, 13, 21, 32}) {
    const Mesh m = build_structured_mesh(geom, ny);
    double total = 0.0;
    double worst_angle = 180.0;
    for (std::size_t t = 0; t < m.triangles.size(); ++t) {
      const double a = triangle_area(m, t);
      CHECK(a > 0.0);
      total += a;
      worst_angle = std::min(worst_angle, min_angle_deg(m, t));
    }
    CHECK(total == doctest::Approx(geom.Lx * geom.Ly).epsilon(1e-12));
    CHECK(worst_angle >= 30.0);
    CHECK(worst_angle == doctest::Approx(45.0).epsilon(1e-9));  // square cells
  }
}

TEST_CASE("Dirichlet node counts on the driven edge") {
  const PlateGeometry geom{5e-2, 1e-3};
  for (int ny : {1, 2, 4, 7}) {
    const Mesh m = build_structured_mesh(geom, ny);
    CHECK(enumerate_nodes(m, 1).dirichlet_nodes.size() == static_cast<std::size_t>(ny + 1));
    CHECK(enumerate_nodes(m, 2).dirichlet_nodes.size() == static_cast<std::size_t>(2 * ny + 1));
    for (int node : enumerate_nodes(m, 2).dirichlet_nodes)
      CHECK(enumerate_nodes(m, 2).nodes[node].x == 0.0);
  }
}

TEST_CASE("node ordering is lexicographic by (y, x)") {
  const Mesh m = build_structured_mesh({5e-2, 1e-3}, 3);
  const NodeSet n = enumerate_nodes(m, 2);
  const int nv = m.vertex_count();
  auto ordered = [&](int from, int to) {
    for (int i = from + 1; i < to; ++i) {
      const Vec2& a = n.nodes[i - 1];
      const Vec2& b = n.nodes[i];
      CHECK((a.y < b.y || (a.y == b.y && a.x < b.x)));
    }
  };
  ordered(0, nv);                  // vertices
  ordered(nv, n.node_count());     // midpoints after vertices
}

TEST_CASE("boundary edges carry exactly one tag each") {
  const Mesh m = build_structured_mesh({5e-2, 1e-3}, 2);
  CHECK(m.boundary_edges.size() == static_cast<std::size_t>(2 * (m.nx + m.ny)));
  std::set<std::pair<int, int>> seen;
  for (const auto& e : m.boundary_edges) {
    auto key = std::minmax(e.v0, e.v1);
    CHECK(seen.emplace(key.first, key.second).second);
  }
}

TEST_CASE("point location over the structured layout") {
  const Mesh m = build_structured_mesh({5e-2, 1e-3}, 2);

  SUBCASE("interior and boundary points") {
    for (auto [x, y] : {std::pair{1.3e-2, 2.5e-4}, {1e-2, 1e-3}, {0.0, 0.0},
                        {5e-2, 1e-3}, {2.49e-2, 9.99e-4}}) {
      const TriangleHit hit = locate_point(m, x, y);
      REQUIRE(hit.triangle >= 0);
      for (double b : hit.bary) {
        CHECK(b >= -1e-9);
        CHECK(b <= 1.0 + 1e-9);
      }
      const auto& tri = m.triangles[hit.triangle];
      double rx = 0.0, ry = 0.0;
      for (int i = 0; i < 3; ++i) {
        rx += hit.bary[i] * m.vertices[tri[i]].x;
        ry += hit.bary[i] * m.vertices[tri[i]].y;
      }
      CHECK(rx == doctest::Approx(x).epsilon(1e-12));
      CHECK(ry == doctest::Approx(y).epsilon(1e-12));
    }
  }

  SUBCASE("outside the plate") {
    CHECK_THROWS_AS(locate_point(m, -1e-3, 5e-4), OutOfDomainError);
    CHECK_THROWS_AS(locate_point(m, 2e-2, 2e-3), OutOfDomainError);
  }
}

TEST_CASE("plain-text mesh export") {
  const Mesh m = build_structured_mesh({1.0, 1.0}, 1);
  std::ostringstream os;
  export_mesh_text(m, os);
  std::istringstream is(os.str());
  int nv = 0, nt = 0;
  is >> nv >> nt;
  CHECK(nv == 4);
  CHECK(nt == 2);
  int interior = 0;
  for (int i = 0; i < nv; ++i) {
    double x, y;
    int tag;
    is >> x >> y >> tag;
    if (tag == 0) ++interior;
    CHECK(tag >= 0);
    CHECK(tag <= 4);
  }
  CHECK(interior == 0);  // all four vertices are corners
  for (int i = 0; i < nt; ++i) {
    int a, b, c;
    is >> a >> b >> c;
    CHECK(a >= 0);
    CHECK(c < nv);
  }
}
