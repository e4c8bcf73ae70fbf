#pragma once

#include <map>

#include "rectihull/core.hpp"

namespace rectihull {

// Midpoint rectification of a convex polygon; preserves the vertex count.
Polygon rectify_polygon(const Polygon& p, const Tolerance& tol = {});

// Hull of all edge midpoints. The f-vector of the result is (e, 2e, 2+e).
Polyhedron rectify_polyhedron(const Polyhedron& p, const Tolerance& tol = {});

// (v,e,f) -> (e, 2e, 2+e); requires Euler's relation on input.
FVector fvector_map(const FVector& fv);

struct SemiregularCheck {
  bool semiregular = false;
  std::string vertex_config;  // e.g. "3.4.3.4", set when uniform
  std::string diagnosis;      // failing face/vertex when not semiregular
};

// All faces regular polygons + one vertex configuration up to
// rotation/reflection.
SemiregularCheck is_semiregular(const Polyhedron& p, const Tolerance& tol = {});

struct SequenceStep {
  int k = 0;
  FVector fvector;
  double volume = 0.0;
  double surface_area = 0.0;
  double edge_min = 0.0;
  double edge_max = 0.0;
  bool semiregular = false;
  std::string vertex_config;
  std::map<int, int> face_degrees;  // degree -> count
  std::string diagnosis;
};

struct SequenceReport {
  std::vector<SequenceStep> steps;
  int purity_length = 0;  // largest k with steps 0..k-1 all semiregular
  bool truncated = false;
  std::vector<Polyhedron> shapes;  // geometry per step, not serialized
};

// Applies rectification k times, recording measures and semiregularity per
// step; step f-vectors are checked against the (e,2e,2+e) map. Stops early
// (truncated=true) if edge lengths collapse below the absolute tolerance.
SequenceReport iterate(const Polyhedron& p, int k, const Tolerance& tol = {});

struct DisjointnessVerdict {
  bool disjoint = false;
  long long pairs_checked = 0;
  std::string collision;  // set when a pair 2^k*12 == 2^x*30 was found
  std::string note;
};

// Exhaustive check that 2^k*12 != 2^x*30 for 0 <= k,x <= max_power.
DisjointnessVerdict check_disjointness(int max_power);

}  // namespace rectihull
