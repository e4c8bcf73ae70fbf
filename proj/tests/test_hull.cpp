#include <doctest.h>

#include <algorithm>
#include <random>

#include "rectihull/hull.hpp"
#include "rectihull/measure.hpp"

using namespace rectihull;

TEST_CASE("hull3: cube corners plus center point") {
  std::vector<Vec3> pts;
  for (int sx : {-1, 1})
    for (int sy : {-1, 1})
      for (int sz : {-1, 1}) pts.push_back({(double)sx, (double)sy, (double)sz});
  pts.push_back({0, 0, 0});
  Polyhedron p = hull3(pts);
  CHECK(p.fvector() == FVector{8, 12, 6});
  CHECK(validate(p).valid);
  for (const Vec3& v : p.vertices) CHECK(v.norm() > 1.0);  // center eliminated
}

TEST_CASE("hull3: octahedron vertices give 8 triangles") {
  std::vector<Vec3> pts = {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0},
                           {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
  Polyhedron p = hull3(pts);
  CHECK(p.fvector() == FVector{6, 12, 8});
  for (const auto& f : p.faces) CHECK(f.size() == 3);
  CHECK(validate(p).valid);
}

TEST_CASE("hull3: cube edge midpoints give the cuboctahedron") {
  Polyhedron cube = seed_polyhedron("cube");
  std::vector<Vec3> mids;
  for (auto [a, b] : cube.edges())
    mids.push_back((cube.vertices[a] + cube.vertices[b]) * 0.5);
  Polyhedron p = hull3(mids);
  CHECK(p.fvector() == FVector{12, 24, 14});
  CHECK(validate(p).valid);
}

TEST_CASE("hull3: degenerate input raises with the deficient rank") {
  std::vector<Vec3> planar = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {0.3, 0.4, 0}};
  CHECK_THROWS_AS(hull3(planar), DegenerateInput);
  try {
    hull3(planar);
  } catch (const DegenerateInput& e) {
    CHECK(e.rank == 2);
  }
  std::vector<Vec3> collinear = {{0, 0, 0}, {1, 1, 1}, {2, 2, 2}, {3, 3, 3}};
  try {
    hull3(collinear);
  } catch (const DegenerateInput& e) {
    CHECK(e.rank == 1);
  }
}

TEST_CASE("hull3: identity on vertices of valid polyhedra") {
  for (const char* name : {"tetrahedron", "cube", "octahedron", "icosahedron",
                           "dodecahedron"}) {
    CAPTURE(name);
    Polyhedron p = seed_polyhedron(name);
    Polyhedron q = hull3(p.vertices);
    CHECK(q.fvector() == p.fvector());
    // same vertex set up to reordering
    for (const Vec3& v : p.vertices) {
      bool found = false;
      for (const Vec3& w : q.vertices)
        if ((v - w).norm() < 1e-12) found = true;
      CHECK(found);
    }
  }
}

TEST_CASE("hull3: random point clouds satisfy Euler and facet support") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Vec3> pts;
    for (int i = 0; i < 60; ++i) pts.push_back({u(rng), u(rng), u(rng)});
    Polyhedron p = hull3(pts);
    FVector fv = p.fvector();
    CHECK(fv.euler_ok());
    CHECK(validate(p).valid);
    // every input point inside or on the hull
    HRep h = to_hrep(p);
    for (const Vec3& q : pts)
      for (const HalfSpace& hs : h.halfspaces) CHECK(hs.signed_distance(q) < 1e-9);
  }
}

TEST_CASE("hull2: square corners plus center") {
  std::vector<Vec2> pts = {{0, 0}, {1, 0}, {1, 1}, {0, 1}, {0.5, 0.5}};
  Polygon p = hull2(pts);
  CHECK(p.n() == 4);
  CHECK(p.area() == doctest::Approx(1.0));
}

TEST_CASE("hull2: midpoints of unit-square edges") {
  std::vector<Vec2> pts = {{0.5, 0}, {1, 0.5}, {0.5, 1}, {0, 0.5}};
  Polygon p = hull2(pts);
  CHECK(p.n() == 4);
  CHECK(p.area() == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("hull2: idempotent on a regular hexagon, rejects collinear input") {
  Polygon hexagon = seed_polygon(6, 1.0);
  Polygon p = hull2(hexagon.vertices);
  CHECK(p.n() == 6);
  CHECK(p.area() == doctest::Approx(1.0).epsilon(1e-12));
  std::vector<Vec2> line = {{0, 0}, {1, 1}, {2, 2}, {3, 3}};
  CHECK_THROWS_AS(hull2(line), DegenerateInput);
}

TEST_CASE("to_hrep: axis cube gives the six axis halfspaces") {
  Polyhedron cube = seed_polyhedron("cube").scaled(2.0);  // [-1,1]^3
  HRep h = to_hrep(cube);
  REQUIRE(h.halfspaces.size() == 6);
  for (const HalfSpace& hs : h.halfspaces) {
    CHECK(hs.normal.norm() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(hs.offset == doctest::Approx(1.0).epsilon(1e-12));
    // axis-aligned normal
    double m = std::max({std::abs(hs.normal.x), std::abs(hs.normal.y),
                         std::abs(hs.normal.z)});
    CHECK(m == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("to_hrep: regular tetrahedron has equal offsets") {
  HRep h = to_hrep(seed_polyhedron("tetrahedron"));
  REQUIRE(h.halfspaces.size() == 4);
  for (size_t i = 1; i < 4; ++i)
    CHECK(h.halfspaces[i].offset ==
          doctest::Approx(h.halfspaces[0].offset).epsilon(1e-12));
}

TEST_CASE("to_hrep: octahedron |x|+|y|+|z| <= 1") {
  std::vector<Vec3> pts = {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0},
                           {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
  HRep h = to_hrep(hull3(pts));
  REQUIRE(h.halfspaces.size() == 8);
  double inv_sqrt3 = 1.0 / std::sqrt(3.0);
  for (const HalfSpace& hs : h.halfspaces) {
    CHECK(hs.offset == doctest::Approx(inv_sqrt3).epsilon(1e-12));
    CHECK(std::abs(hs.normal.x) == doctest::Approx(inv_sqrt3).epsilon(1e-12));
  }
}

TEST_CASE("intersect_hrep: cube halfspaces round trip") {
  Polyhedron cube = seed_polyhedron("cube").scaled(2.0);
  Polyhedron back = intersect_hrep(to_hrep(cube));
  CHECK(back.fvector() == FVector{8, 12, 6});
  CHECK(volume(back) == doctest::Approx(8.0).epsilon(1e-12));
}

TEST_CASE("intersect_hrep: cube with octahedron constraints is the cuboctahedron") {
  Polyhedron cube = seed_polyhedron("cube").scaled(2.0);
  HRep h = to_hrep(cube);
  double inv_sqrt3 = 1.0 / std::sqrt(3.0);
  for (int sx : {-1, 1})
    for (int sy : {-1, 1})
      for (int sz : {-1, 1})
        h.halfspaces.push_back(
            {{sx * inv_sqrt3, sy * inv_sqrt3, sz * inv_sqrt3}, 2.0 * inv_sqrt3});
  Polyhedron p = intersect_hrep(h);
  CHECK(p.fvector() == FVector{12, 24, 14});
  // same as hulling the cube edge midpoints directly
  std::vector<Vec3> mids;
  for (auto [a, b] : cube.edges())
    mids.push_back((cube.vertices[a] + cube.vertices[b]) * 0.5);
  Polyhedron q = hull3(mids);
  CHECK(volume(p) == doctest::Approx(volume(q)).epsilon(1e-12));
  for (const Vec3& v : p.vertices) {
    bool found = false;
    for (const Vec3& w : q.vertices)
      if ((v - w).norm() < 1e-9) found = true;
    CHECK(found);
  }
}

TEST_CASE("intersect_hrep: duplicate constraints are redundant") {
  Polyhedron cube = seed_polyhedron("cube");
  HRep h = to_hrep(cube);
  HRep doubled = h;
  doubled.halfspaces.insert(doubled.halfspaces.end(), h.halfspaces.begin(),
                            h.halfspaces.end());
  Polyhedron p = intersect_hrep(doubled);
  CHECK(p.fvector() == FVector{8, 12, 6});
  CHECK(volume(p) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("intersect_hrep: unbounded constraint sets are rejected") {
  HRep h;
  h.interior_point = {0, 0, 0};
  h.halfspaces = {{{1, 0, 0}, 1.0}, {{-1, 0, 0}, 1.0}, {{0, 1, 0}, 1.0},
                  {{0, -1, 0}, 1.0}, {{0, 0, 1}, 1.0}};  // open below
  CHECK_THROWS_AS(intersect_hrep(h), UnboundedError);
}

TEST_CASE("intersect_hrep round trips all seeds") {
  for (const char* name : {"tetrahedron", "cube", "octahedron", "icosahedron",
                           "dodecahedron"}) {
    CAPTURE(name);
    Polyhedron p = seed_polyhedron(name);
    Polyhedron q = intersect_hrep(to_hrep(p));
    CHECK(q.fvector() == p.fvector());
    for (const Vec3& v : p.vertices) {
      double best = 1e300;
      for (const Vec3& w : q.vertices) best = std::min(best, (v - w).norm());
      CHECK(best < 1e-9);
    }
  }
}
