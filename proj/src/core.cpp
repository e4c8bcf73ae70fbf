#include "rectihull/core.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "rectihull/hull.hpp"

namespace rectihull {

double Polygon::area() const {
  double a = 0.0;
  for (size_t i = 0; i < vertices.size(); ++i) {
    const Vec2& u = vertices[i];
    const Vec2& v = vertices[(i + 1) % vertices.size()];
    a += u.cross(v);
  }
  return 0.5 * a;
}

double Polygon::perimeter() const {
  double p = 0.0;
  for (size_t i = 0; i < vertices.size(); ++i)
    p += (vertices[(i + 1) % vertices.size()] - vertices[i]).norm();
  return p;
}

Vec2 Polygon::vertex_centroid() const {
  Vec2 c;
  for (const Vec2& v : vertices) c = c + v;
  return c / static_cast<double>(vertices.size());
}

void Polygon::validate(const Tolerance& tol) const {
  if (n() < 3) throw ValidationError("polygon has fewer than 3 vertices");
  for (int i = 0; i < n(); ++i) {
    const Vec2& a = vertices[i];
    const Vec2& b = vertices[(i + 1) % n()];
    const Vec2& c = vertices[(i + 2) % n()];
    Vec2 u = b - a, w = c - b;
    double lu = u.norm(), lw = w.norm();
    if (lu == 0.0 || lw == 0.0)
      throw ValidationError("polygon has a repeated vertex");
    // relative sine of the turn angle: scale-free strict convexity
    if (u.cross(w) <= tol.rel * lu * lw)
      throw ValidationError("polygon is not strictly convex (or clockwise) at vertex " +
                            std::to_string((i + 1) % n()));
  }
}

std::vector<std::pair<int, int>> Polyhedron::edges() const {
  std::set<std::pair<int, int>> s;
  for (const auto& face : faces) {
    for (size_t i = 0; i < face.size(); ++i) {
      int a = face[i], b = face[(i + 1) % face.size()];
      s.insert({std::min(a, b), std::max(a, b)});
    }
  }
  return {s.begin(), s.end()};
}

FVector Polyhedron::fvector() const {
  return {static_cast<long long>(vertices.size()),
          static_cast<long long>(edges().size()),
          static_cast<long long>(faces.size())};
}

Vec3 Polyhedron::vertex_centroid() const {
  Vec3 c;
  for (const Vec3& v : vertices) c += v;
  return c / static_cast<double>(vertices.size());
}

double Polyhedron::circumradius() const {
  Vec3 c = vertex_centroid();
  double r = 0.0;
  for (const Vec3& v : vertices) r = std::max(r, (v - c).norm());
  return r;
}

double Polyhedron::scale() const {
  if (vertices.empty()) return 0.0;
  Vec3 lo = vertices[0], hi = vertices[0];
  for (const Vec3& v : vertices) {
    lo = {std::min(lo.x, v.x), std::min(lo.y, v.y), std::min(lo.z, v.z)};
    hi = {std::max(hi.x, v.x), std::max(hi.y, v.y), std::max(hi.z, v.z)};
  }
  return (hi - lo).norm();
}

Polyhedron Polyhedron::translated(const Vec3& t) const {
  Polyhedron q = *this;
  for (Vec3& v : q.vertices) v += t;
  return q;
}

Polyhedron Polyhedron::scaled(double c) const {
  Polyhedron q = *this;
  for (Vec3& v : q.vertices) v = v * c;
  return q;
}

namespace {

// Newell normal (not normalized) and face centroid.
std::pair<Vec3, Vec3> face_plane(const Polyhedron& p, const std::vector<int>& face) {
  Vec3 n, c;
  for (size_t i = 0; i < face.size(); ++i) {
    const Vec3& a = p.vertices[face[i]];
    const Vec3& b = p.vertices[face[(i + 1) % face.size()]];
    n += a.cross(b);
    c += a;
  }
  return {n, c / static_cast<double>(face.size())};
}

}  // namespace

std::string ValidationReport::summary() const {
  std::ostringstream os;
  for (const auto& c : checks) {
    os << (c.ok ? "[ok]   " : "[FAIL] ") << c.name;
    if (!c.detail.empty()) os << ": " << c.detail;
    os << "\n";
  }
  return os.str();
}

ValidationReport validate(const Polyhedron& p, const Tolerance& tol) {
  ValidationReport rep;
  auto add = [&rep](const std::string& name, bool ok, const std::string& detail = "") {
    rep.checks.push_back({name, ok, ok ? "" : detail});
  };

  const int nv = static_cast<int>(p.vertices.size());
  bool indices_ok = nv >= 4 && !p.faces.empty();
  std::string idx_detail;
  if (!indices_ok) idx_detail = "fewer than 4 vertices or no faces";
  for (const auto& face : p.faces) {
    if (face.size() < 3) {
      indices_ok = false;
      idx_detail = "face cycle shorter than 3";
      break;
    }
    std::set<int> uniq(face.begin(), face.end());
    if (uniq.size() != face.size()) {
      indices_ok = false;
      idx_detail = "repeated vertex in a face cycle";
      break;
    }
    for (int i : face)
      if (i < 0 || i >= nv) {
        indices_ok = false;
        idx_detail = "vertex index out of range";
        break;
      }
  }
  for (const Vec3& v : p.vertices)
    if (!v.finite()) {
      indices_ok = false;
      idx_detail = "non-finite vertex coordinate";
    }
  add("indices", indices_ok, idx_detail);
  if (!indices_ok) {
    rep.valid = false;
    return rep;
  }

  std::vector<char> used(nv, 0);
  for (const auto& face : p.faces)
    for (int i : face) used[i] = 1;
  bool coverage = std::all_of(used.begin(), used.end(), [](char c) { return c; });
  add("vertex-coverage", coverage, "vertex not referenced by any face");

  // Each undirected edge must be used by exactly two faces, once in each
  // direction (consistent outward orientation).
  std::map<std::pair<int, int>, int> directed;
  for (const auto& face : p.faces)
    for (size_t i = 0; i < face.size(); ++i)
      directed[{face[i], face[(i + 1) % face.size()]}]++;
  bool manifold = true;
  std::string manifold_detail;
  for (const auto& [e, count] : directed) {
    auto rev = directed.find({e.second, e.first});
    if (count != 1 || rev == directed.end() || rev->second != 1) {
      manifold = false;
      manifold_detail = "edge (" + std::to_string(e.first) + "," +
                        std::to_string(e.second) + ") not shared by exactly 2 oriented faces";
      break;
    }
  }
  add("edge-manifold", manifold, manifold_detail);

  FVector fv = p.fvector();
  add("euler", fv.euler_ok(), "v-e+f = " + std::to_string(fv.v - fv.e + fv.f));

  const double eps = tol.merge(p.scale());
  Vec3 centroid = p.vertex_centroid();

  bool planar = true, convex = true, oriented = true;
  std::string planar_detail, convex_detail, orient_detail;
  std::vector<Vec3> unit_normals(p.faces.size());
  std::vector<double> offsets(p.faces.size());
  for (size_t fi = 0; fi < p.faces.size(); ++fi) {
    auto [n, c] = face_plane(p, p.faces[fi]);
    double ln = n.norm();
    if (ln <= 0.0) {
      planar = false;
      planar_detail = "face " + std::to_string(fi) + " has zero normal";
      continue;
    }
    Vec3 u = n / ln;
    unit_normals[fi] = u;
    offsets[fi] = u.dot(c);
    for (int i : p.faces[fi])
      if (std::abs(u.dot(p.vertices[i]) - offsets[fi]) > eps) {
        planar = false;
        planar_detail = "face " + std::to_string(fi) + " is not planar";
      }
    if (u.dot(centroid) - offsets[fi] > -eps) {
      oriented = false;
      orient_detail = "face " + std::to_string(fi) + " faces inward (orientation violation)";
    }
    for (int i = 0; i < nv; ++i)
      if (u.dot(p.vertices[i]) - offsets[fi] > eps) {
        convex = false;
        convex_detail = "vertex " + std::to_string(i) + " is outside face " +
                        std::to_string(fi);
      }
  }
  add("face-planarity", planar, planar_detail);
  add("orientation", oriented, orient_detail);
  add("convexity", convex, convex_detail);

  // No two adjacent faces may be coplanar (every edge midpoint must be
  // extreme under rectification).
  bool distinct = true;
  std::string distinct_detail;
  std::map<std::pair<int, int>, int> edge_face;
  for (size_t fi = 0; fi < p.faces.size() && distinct; ++fi) {
    const auto& face = p.faces[fi];
    for (size_t i = 0; i < face.size(); ++i) {
      int a = face[i], b = face[(i + 1) % face.size()];
      auto key = std::minmax(a, b);
      auto it = edge_face.find(key);
      if (it == edge_face.end()) {
        edge_face[key] = static_cast<int>(fi);
        continue;
      }
      int fj = it->second;
      double align = unit_normals[fi].dot(unit_normals[fj]);
      if (align > 1.0 - tol.rel &&
          std::abs(offsets[fi] - offsets[fj]) <= eps) {
        distinct = false;
        distinct_detail = "faces " + std::to_string(fj) + " and " +
                          std::to_string(fi) + " are coplanar across a shared edge";
        break;
      }
    }
  }
  add("coplanar-adjacency", distinct, distinct_detail);

  rep.valid = std::all_of(rep.checks.begin(), rep.checks.end(),
                          [](const auto& c) { return c.ok; });
  return rep;
}

void require_valid(const Polyhedron& p, const Tolerance& tol) {
  ValidationReport rep = validate(p, tol);
  if (!rep.valid) throw ValidationError("invalid polyhedron:\n" + rep.summary());
}

Polygon seed_polygon(int n, double area) {
  if (n < 3) throw InvalidParameter("seed_polygon: n must be >= 3");
  if (!(area > 0.0)) throw InvalidParameter("seed_polygon: area must be > 0");
  // area = (1/2) n R^2 sin(2 pi / n)
  double radius = std::sqrt(2.0 * area / (n * std::sin(2.0 * M_PI / n)));
  Polygon p;
  p.vertices.reserve(n);
  for (int i = 0; i < n; ++i) {
    double a = 2.0 * M_PI * i / n;
    p.vertices.push_back({radius * std::cos(a), radius * std::sin(a)});
  }
  return p;
}

namespace {

Polyhedron hull_of(std::vector<Vec3> pts) {
  Polyhedron p = hull3(pts);
  // seeds are symmetric point sets; recenter exactly on the vertex centroid
  Vec3 c = p.vertex_centroid();
  return p.translated(-c);
}

Polyhedron make_tetrahedron() {
  double s = 1.0 / (2.0 * std::sqrt(2.0));  // edge length 1
  std::vector<Vec3> pts = {{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};
  for (Vec3& v : pts) v = v * s;
  return hull_of(pts);
}

Polyhedron make_cube() {
  std::vector<Vec3> pts;
  for (int sx : {-1, 1})
    for (int sy : {-1, 1})
      for (int sz : {-1, 1}) pts.push_back({0.5 * sx, 0.5 * sy, 0.5 * sz});
  return hull_of(pts);
}

Polyhedron make_octahedron() {
  double a = 1.0 / std::sqrt(2.0);  // edge length 1
  std::vector<Vec3> pts = {{a, 0, 0}, {-a, 0, 0}, {0, a, 0},
                           {0, -a, 0}, {0, 0, a}, {0, 0, -a}};
  return hull_of(pts);
}

Polyhedron make_icosahedron() {
  double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  std::vector<Vec3> pts;
  for (int s1 : {-1, 1})
    for (int s2 : {-1, 1}) {
      pts.push_back({0, 0.5 * s1, 0.5 * phi * s2});
      pts.push_back({0.5 * s1, 0.5 * phi * s2, 0});
      pts.push_back({0.5 * phi * s2, 0, 0.5 * s1});
    }
  return hull_of(pts);  // edge length 1
}

Polyhedron make_dodecahedron() {
  double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  double s = phi / 2.0;  // scales edge length 2/phi to 1
  std::vector<Vec3> pts;
  for (int sx : {-1, 1})
    for (int sy : {-1, 1})
      for (int sz : {-1, 1}) pts.push_back({1.0 * sx, 1.0 * sy, 1.0 * sz});
  for (int s1 : {-1, 1})
    for (int s2 : {-1, 1}) {
      pts.push_back({0, s1 / phi, phi * s2});
      pts.push_back({s1 / phi, phi * s2, 0});
      pts.push_back({phi * s2, 0, s1 / phi});
    }
  for (Vec3& v : pts) v = v * s;
  return hull_of(pts);
}

Polyhedron make_prism(int n) {
  if (n < 3) throw InvalidParameter("prism: n must be >= 3");
  Polygon base = seed_polygon(n, 1.0);
  std::vector<Vec3> pts;
  for (const Vec2& v : base.vertices) {
    pts.push_back({v.x, v.y, -0.5});
    pts.push_back({v.x, v.y, 0.5});
  }
  return hull_of(pts);
}

}  // namespace

Polyhedron seed_polyhedron(SeedShape shape, int param) {
  switch (shape) {
    case SeedShape::Tetrahedron: return make_tetrahedron();
    case SeedShape::Cube: return make_cube();
    case SeedShape::Octahedron: return make_octahedron();
    case SeedShape::Icosahedron: return make_icosahedron();
    case SeedShape::Dodecahedron: return make_dodecahedron();
    case SeedShape::Prism: return make_prism(param);
  }
  throw InvalidParameter("unknown seed shape");
}

Polyhedron seed_polyhedron(const std::string& name, int param) {
  if (name == "tetrahedron") return make_tetrahedron();
  if (name == "cube") return make_cube();
  if (name == "octahedron") return make_octahedron();
  if (name == "icosahedron") return make_icosahedron();
  if (name == "dodecahedron") return make_dodecahedron();
  if (name == "prism") return make_prism(param);
  throw InvalidParameter("unknown seed shape: " + name);
}

std::vector<std::string> seed_names() {
  return {"tetrahedron", "cube", "octahedron", "icosahedron", "dodecahedron", "prism"};
}

}  // namespace rectihull
