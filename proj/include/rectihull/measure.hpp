#pragma once

#include "rectihull/core.hpp"

namespace rectihull {

// --- closed forms for rectified regular polygons (unit-area seed) ---

// area of the k-th rectification: ((1 - cos theta_n)/2)^k
double polygon_area_closed(int n, int k);
// series total over all rectifications: 2/(1 + cos theta_n)
double polygon_area_total(int n);
// side length of the k-th rectification
double polygon_side_closed(int n, int k);
// perimeter series total: 2 sqrt(n tan(pi/n)) / (1 - |cos(pi/n)|)
double polygon_perimeter_total(int n);

struct PolygonSeriesStep {
  int k = 0;
  double side_closed = 0.0, side_measured = 0.0;
  double area_closed = 0.0, area_measured = 0.0;
  double perimeter_measured = 0.0;
};

struct PolygonSeries {
  int n = 0;
  std::vector<PolygonSeriesStep> steps;
  double area_total_closed = 0.0;      // series sum, closed form
  double area_total_measured = 0.0;    // partial sum of measured areas
  double perimeter_total_closed = 0.0;
  double perimeter_total_measured = 0.0;
  double max_deviation = 0.0;  // worst relative closed-vs-measured gap
};

// Iterates rectify_polygon on the unit-area n-gon k_max times and compares
// measured values against the closed forms step by step.
PolygonSeries polygon_series(int n, int k_max, const Tolerance& tol = {});

// --- polyhedron measures ---

// Divergence-theorem volume over fan-triangulated facets.
double volume(const Polyhedron& p, const Tolerance& tol = {});
double surface_area(const Polyhedron& p, const Tolerance& tol = {});
// Volume centroid (not the vertex centroid).
Vec3 centroid(const Polyhedron& p, const Tolerance& tol = {});
std::vector<double> edge_lengths(const Polyhedron& p);

struct MeasureReport {
  double volume = 0.0;
  double surface_area = 0.0;
  Vec3 centroid;
  double edge_min = 0.0, edge_mean = 0.0, edge_max = 0.0;
  std::vector<double> face_areas;
  FVector fvector;
};

MeasureReport measure(const Polyhedron& p, const Tolerance& tol = {});

struct VertexCap {
  Polyhedron cap;  // conv({v} + midpoints of incident edges)
  double volume = 0.0;
  bool figure_coplanar = false;  // are the midpoints coplanar?
  double figure_deviation = 0.0; // max relative plane deviation
};

VertexCap vertex_cap(const Polyhedron& p, int vertex_index,
                     const Tolerance& tol = {});

struct CapDecompositionError : std::runtime_error {
  int vertex;
  CapDecompositionError(const std::string& msg, int v)
      : std::runtime_error(msg), vertex(v) {}
};

// vol(p) - sum of vertex caps; exact (and accepted) only when every vertex
// figure is coplanar, otherwise CapDecompositionError names a bad vertex.
double volume_by_cap_decomposition(const Polyhedron& p, const Tolerance& tol = {});

struct PrismRectVolumeReport {
  int n = 0;
  double side_sq = 0.0;             // s^2 of the unit-area n-gon
  double per_cap = 0.0;             // s^2 sin(theta_n)/48
  double literal_formula = 0.0;     // 1 - s^2 sin(theta_n)/48
  double decomposition = 0.0;       // 1 - 2n * per_cap
  double direct = 0.0;              // hull volume of the rectified prism
  bool literal_matches_direct = false;
  bool decomposition_matches_direct = false;
  std::string note;
};

// Candidate readings of the rectified-prism volume, adjudicated by the
// divergence-theorem oracle.
PrismRectVolumeReport prism_rect_volume_report(int n, const Tolerance& tol = {});

}  // namespace rectihull
