#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rectihull {

struct Vec3 {
  double x = 0.0, y = 0.0, z = 0.0;

  Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
  Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }
  Vec3 operator-() const { return {-x, -y, -z}; }
  Vec3& operator+=(const Vec3& o) { x += o.x; y += o.y; z += o.z; return *this; }

  double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
  Vec3 cross(const Vec3& o) const {
    return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
  }
  double norm() const { return std::sqrt(dot(*this)); }
  Vec3 normalized() const { return *this / norm(); }
  bool finite() const {
    return std::isfinite(x) && std::isfinite(y) && std::isfinite(z);
  }
};

inline Vec3 operator*(double s, const Vec3& v) { return v * s; }

struct Vec2 {
  double x = 0.0, y = 0.0;

  Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(double s) const { return {x * s, y * s}; }
  Vec2 operator/(double s) const { return {x / s, y / s}; }
  double dot(const Vec2& o) const { return x * o.x + y * o.y; }
  double cross(const Vec2& o) const { return x * o.y - y * o.x; }
  double norm() const { return std::sqrt(dot(*this)); }
};

// Central tolerance policy. merge(scale) is the absolute slack used for
// coplanarity / coincidence tests at a given geometric scale.
struct Tolerance {
  double rel = 1e-9;
  double abs = 1e-12;

  double merge(double scale) const { return std::max(abs, rel * scale); }
};

struct InvalidParameter : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Thrown by hull code on rank-deficient input; rank is the affine rank found.
struct DegenerateInput : std::runtime_error {
  int rank;
  DegenerateInput(const std::string& msg, int rank_)
      : std::runtime_error(msg), rank(rank_) {}
};

struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnboundedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FVector {
  long long v = 0, e = 0, f = 0;

  bool euler_ok() const { return v - e + f == 2; }
  bool operator==(const FVector&) const = default;
  std::string str() const {
    return "(" + std::to_string(v) + "," + std::to_string(e) + "," +
           std::to_string(f) + ")";
  }
};

// Ordered counter-clockwise planar vertex loop.
struct Polygon {
  std::vector<Vec2> vertices;

  int n() const { return static_cast<int>(vertices.size()); }
  double area() const;       // shoelace
  double perimeter() const;
  Vec2 vertex_centroid() const;
  // Strict convexity + orientation check; throws ValidationError on failure.
  void validate(const Tolerance& tol = {}) const;
};

// Vertex/face-cycle polyhedron; faces are counter-clockwise from outside.
struct Polyhedron {
  std::vector<Vec3> vertices;
  std::vector<std::vector<int>> faces;

  std::vector<std::pair<int, int>> edges() const;  // unordered pairs, sorted
  FVector fvector() const;
  Vec3 vertex_centroid() const;
  double circumradius() const;  // max vertex distance from vertex centroid
  double scale() const;         // bounding-box diagonal
  Polyhedron translated(const Vec3& t) const;
  Polyhedron scaled(double c) const;
};

struct ValidationReport {
  struct Check {
    std::string name;
    bool ok;
    std::string detail;  // empty when ok
  };
  std::vector<Check> checks;
  bool valid = false;

  std::string summary() const;
};

ValidationReport validate(const Polyhedron& p, const Tolerance& tol = {});
// Shorthand that throws ValidationError with the report summary on failure.
void require_valid(const Polyhedron& p, const Tolerance& tol = {});

// Interior angle of the regular n-gon.
inline double interior_angle(int n) {
  return M_PI * (n - 2) / n;
}

// Side length (squared) of the regular n-gon of unit area.
inline double unit_area_side_sq(int n) {
  return 4.0 * std::tan(M_PI / n) / n;
}

struct RegularPolygonSpec {
  int n;
  double area = 1.0;
  double side() const { return std::sqrt(unit_area_side_sq(n) * area); }
  double theta() const { return interior_angle(n); }
};

// Regular n-gon of the given area, centered at the origin, first vertex on
// the positive x-axis.
Polygon seed_polygon(int n, double area = 1.0);

enum class SeedShape {
  Tetrahedron,
  Cube,
  Octahedron,
  Icosahedron,
  Dodecahedron,
  Prism,
};

// Platonic solids use unit edge length; prism(n) is the unit-area regular
// n-gon extruded to unit height, centered at the origin.
Polyhedron seed_polyhedron(SeedShape shape, int param = 0);
Polyhedron seed_polyhedron(const std::string& name, int param = 0);
std::vector<std::string> seed_names();

}  // namespace rectihull
