#pragma once

#include <span>

#include "rectihull/core.hpp"

namespace rectihull {

// Constraint normal . x <= offset, |normal| = 1.
struct HalfSpace {
  Vec3 normal;
  double offset = 0.0;

  double signed_distance(const Vec3& p) const { return normal.dot(p) - offset; }
};

struct HRep {
  std::vector<HalfSpace> halfspaces;
  Vec3 interior_point;
};

// Convex hull of 3D points. Coplanar triangles are merged into maximal planar
// facets, so the f-vector of the result is combinatorially exact. Duplicate
// points within tolerance are coalesced; interior points do not appear in the
// output vertex list. Throws DegenerateInput when the points have affine
// rank < 3.
Polyhedron hull3(std::span<const Vec3> points, const Tolerance& tol = {});

// Convex hull of 2D points, counter-clockwise, collinear points dropped.
// Throws DegenerateInput when all points are collinear.
Polygon hull2(std::span<const Vec2> points, const Tolerance& tol = {});

// One halfspace per facet, outward unit normal; interior point is the vertex
// centroid.
HRep to_hrep(const Polyhedron& p, const Tolerance& tol = {});

// Vertex enumeration by point duality about h.interior_point. Throws
// UnboundedError when the constraint set is unbounded or has empty interior.
Polyhedron intersect_hrep(const HRep& h, const Tolerance& tol = {});

// Intersection of two polyhedra that both strictly contain `interior`.
Polyhedron intersect(const Polyhedron& a, const Polyhedron& b,
                     const Vec3& interior = {}, const Tolerance& tol = {});

}  // namespace rectihull
