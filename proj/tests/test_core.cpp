#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "rectihull/core.hpp"

using namespace rectihull;

TEST_CASE("seed_polygon: unit square") {
  Polygon p = seed_polygon(4, 1.0);
  REQUIRE(p.n() == 4);
  CHECK(p.area() == doctest::Approx(1.0).epsilon(1e-12));
  // side length 1, first vertex on the positive x-axis
  CHECK((p.vertices[1] - p.vertices[0]).norm() == doctest::Approx(1.0));
  CHECK(p.vertices[0].y == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(p.vertices[0].x > 0.0);
  p.validate();
}

TEST_CASE("seed_polygon: triangle side matches s^2 = 4 tan(pi/3)/3") {
  Polygon p = seed_polygon(3, 1.0);
  double s = (p.vertices[1] - p.vertices[0]).norm();
  CHECK(s * s == doctest::Approx(4.0 * std::tan(M_PI / 3.0) / 3.0).epsilon(1e-12));
  CHECK(s * s == doctest::Approx(2.3094).epsilon(1e-4));
}

TEST_CASE("seed_polygon: shoelace area equals request for 3 <= n <= 100") {
  for (int n = 3; n <= 100; ++n) {
    Polygon p = seed_polygon(n, 1.0);
    CHECK(p.area() == doctest::Approx(1.0).epsilon(1e-9));
    p.validate();
  }
  Polygon big = seed_polygon(7, 3.5);
  CHECK(big.area() == doctest::Approx(3.5).epsilon(1e-9));
}

TEST_CASE("seed_polygon: parameter validation") {
  CHECK_THROWS_AS(seed_polygon(2, 1.0), InvalidParameter);
  CHECK_THROWS_AS(seed_polygon(5, 0.0), InvalidParameter);
  CHECK_THROWS_AS(seed_polygon(5, -1.0), InvalidParameter);
}

TEST_CASE("seed polyhedra: f-vectors and validity") {
  struct Row {
    const char* name;
    int param;
    FVector fv;
  };
  const Row rows[] = {
      {"tetrahedron", 0, {4, 6, 4}},
      {"cube", 0, {8, 12, 6}},
      {"octahedron", 0, {6, 12, 8}},
      {"icosahedron", 0, {12, 30, 20}},
      {"dodecahedron", 0, {20, 30, 12}},
      {"prism", 5, {10, 15, 7}},
  };
  for (const Row& r : rows) {
    CAPTURE(r.name);
    Polyhedron p = seed_polyhedron(r.name, r.param);
    CHECK(p.fvector() == r.fv);
    ValidationReport rep = validate(p);
    CHECK(rep.valid);
    Vec3 c = p.vertex_centroid();
    CHECK(c.norm() < 1e-12);
  }
}

TEST_CASE("seed polyhedra: platonic solids have unit edges") {
  for (const char* name : {"tetrahedron", "cube", "octahedron", "icosahedron",
                           "dodecahedron"}) {
    CAPTURE(name);
    Polyhedron p = seed_polyhedron(name);
    for (auto [a, b] : p.edges())
      CHECK((p.vertices[b] - p.vertices[a]).norm() == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("seed_polyhedron: unknown name") {
  CHECK_THROWS_AS(seed_polyhedron("spheroid"), InvalidParameter);
  CHECK_THROWS_AS(seed_polyhedron("prism", 2), InvalidParameter);
}

TEST_CASE("validate: cube with a split coplanar facet is rejected") {
  Polyhedron cube = seed_polyhedron("cube");
  // split face 0 into two triangles sharing an edge -> coplanar adjacency
  std::vector<int> face = cube.faces[0];
  REQUIRE(face.size() == 4);
  cube.faces.erase(cube.faces.begin());
  cube.faces.push_back({face[0], face[1], face[2]});
  cube.faces.push_back({face[0], face[2], face[3]});
  ValidationReport rep = validate(cube);
  CHECK_FALSE(rep.valid);
  bool coplanar_failed = false;
  for (const auto& c : rep.checks)
    if (c.name == "coplanar-adjacency" && !c.ok) coplanar_failed = true;
  CHECK(coplanar_failed);
}

TEST_CASE("validate: tetrahedron with one reversed face is rejected") {
  Polyhedron tet = seed_polyhedron("tetrahedron");
  std::reverse(tet.faces[0].begin(), tet.faces[0].end());
  ValidationReport rep = validate(tet);
  CHECK_FALSE(rep.valid);
  bool bad_orientation = false;
  for (const auto& c : rep.checks)
    if ((c.name == "orientation" || c.name == "edge-manifold") && !c.ok)
      bad_orientation = true;
  CHECK(bad_orientation);
}

TEST_CASE("polygon validate rejects concave and repeated vertices") {
  Polygon concave{{{0, 0}, {2, 0}, {1, 0.1}, {1, 2}}};
  CHECK_THROWS_AS(concave.validate(), ValidationError);
  Polygon repeated{{{0, 0}, {1, 0}, {1, 0}, {0, 1}}};
  CHECK_THROWS_AS(repeated.validate(), ValidationError);
}
