#include "rectihull/rectify.hpp"

#include <algorithm>
#include <sstream>

#include "rectihull/hull.hpp"
#include "rectihull/measure.hpp"

namespace rectihull {

Polygon rectify_polygon(const Polygon& p, const Tolerance& tol) {
  p.validate(tol);
  std::vector<Vec2> mids;
  mids.reserve(p.vertices.size());
  for (int i = 0; i < p.n(); ++i)
    mids.push_back((p.vertices[i] + p.vertices[(i + 1) % p.n()]) * 0.5);
  Polygon r = hull2(mids, tol);
  if (r.n() != p.n())
    throw std::runtime_error("rectify_polygon: vertex count changed from " +
                             std::to_string(p.n()) + " to " + std::to_string(r.n()));
  return r;
}

Polyhedron rectify_polyhedron(const Polyhedron& p, const Tolerance& tol) {
  require_valid(p, tol);
  std::vector<Vec3> mids;
  for (auto [a, b] : p.edges())
    mids.push_back((p.vertices[a] + p.vertices[b]) * 0.5);
  Polyhedron r = hull3(mids, tol);
  FVector expected = fvector_map(p.fvector());
  if (!(r.fvector() == expected))
    throw std::runtime_error("rectify_polyhedron: f-vector " + r.fvector().str() +
                             " does not match predicted " + expected.str());
  return r;
}

FVector fvector_map(const FVector& fv) {
  if (!fv.euler_ok())
    throw InvalidParameter("fvector_map: input violates Euler's relation");
  return {fv.e, 2 * fv.e, 2 + fv.e};
}

namespace {

// Cyclic face order around a vertex, walking across shared edges.
std::vector<int> faces_around_vertex(const Polyhedron& p, int v,
                                     const std::map<std::pair<int, int>, int>& owner) {
  int first = -1;
  for (size_t fi = 0; fi < p.faces.size() && first < 0; ++fi)
    if (std::find(p.faces[fi].begin(), p.faces[fi].end(), v) != p.faces[fi].end())
      first = static_cast<int>(fi);
  std::vector<int> ring;
  int cur = first;
  do {
    ring.push_back(cur);
    const auto& face = p.faces[cur];
    int pos = static_cast<int>(std::find(face.begin(), face.end(), v) - face.begin());
    int succ = face[(pos + 1) % face.size()];
    auto it = owner.find({succ, v});
    if (it == owner.end())
      throw ValidationError("faces_around_vertex: broken edge adjacency");
    cur = it->second;
  } while (cur != first && ring.size() <= p.faces.size());
  if (cur != first)
    throw ValidationError("faces_around_vertex: vertex star does not close");
  return ring;
}

std::string canonical_config(std::vector<int> seq) {
  auto best = seq;
  auto consider = [&best](const std::vector<int>& s) {
    if (s < best) best = s;
  };
  int m = static_cast<int>(seq.size());
  std::vector<int> rev(seq.rbegin(), seq.rend());
  for (int r = 0; r < m; ++r) {
    std::rotate(seq.begin(), seq.begin() + 1, seq.end());
    consider(seq);
    std::rotate(rev.begin(), rev.begin() + 1, rev.end());
    consider(rev);
  }
  std::ostringstream os;
  for (int i = 0; i < m; ++i) os << (i ? "." : "") << best[i];
  return os.str();
}

struct FaceShape {
  bool regular;
  std::string diagnosis;
};

FaceShape face_regularity(const Polyhedron& p, int fi, const Tolerance& tol) {
  const auto& face = p.faces[fi];
  int m = static_cast<int>(face.size());
  std::vector<double> len(m);
  for (int i = 0; i < m; ++i)
    len[i] = (p.vertices[face[(i + 1) % m]] - p.vertices[face[i]]).norm();
  double lmin = *std::min_element(len.begin(), len.end());
  double lmax = *std::max_element(len.begin(), len.end());
  double lmean = 0.0;
  for (double l : len) lmean += l;
  lmean /= m;

  std::ostringstream os;
  if (lmax - lmin > tol.rel * lmean) {
    os << "face " << fi << " (" << m << "-gon): edge lengths not equal (min "
       << lmin << ", max " << lmax << ")";
    if (m == 4) {
      bool opp = std::abs(len[0] - len[2]) <= tol.rel * lmean &&
                 std::abs(len[1] - len[3]) <= tol.rel * lmean;
      double d0 = (p.vertices[face[2]] - p.vertices[face[0]]).norm();
      double d1 = (p.vertices[face[3]] - p.vertices[face[1]]).norm();
      if (opp && std::abs(d0 - d1) <= tol.rel * lmean)
        os << "; non-square rectangular face";
    }
    return {false, os.str()};
  }

  Vec3 c;
  for (int i : face) c += p.vertices[i];
  c = c / static_cast<double>(m);
  std::vector<double> rad(m);
  for (int i = 0; i < m; ++i) rad[i] = (p.vertices[face[i]] - c).norm();
  double rmin = *std::min_element(rad.begin(), rad.end());
  double rmax = *std::max_element(rad.begin(), rad.end());
  if (rmax - rmin > tol.rel * rmax) {
    os << "face " << fi << " (" << m << "-gon): vertices not concyclic";
    return {false, os.str()};
  }
  return {true, ""};
}

}  // namespace

SemiregularCheck is_semiregular(const Polyhedron& p, const Tolerance& tol) {
  require_valid(p, tol);
  for (size_t fi = 0; fi < p.faces.size(); ++fi) {
    FaceShape fs = face_regularity(p, static_cast<int>(fi), tol);
    if (!fs.regular) return {false, "", fs.diagnosis};
  }

  std::map<std::pair<int, int>, int> owner;
  for (size_t fi = 0; fi < p.faces.size(); ++fi) {
    const auto& face = p.faces[fi];
    for (size_t i = 0; i < face.size(); ++i)
      owner[{face[i], face[(i + 1) % face.size()]}] = static_cast<int>(fi);
  }

  std::string config;
  for (int v = 0; v < static_cast<int>(p.vertices.size()); ++v) {
    std::vector<int> degrees;
    for (int fi : faces_around_vertex(p, v, owner))
      degrees.push_back(static_cast<int>(p.faces[fi].size()));
    std::string c = canonical_config(degrees);
    if (config.empty()) {
      config = c;
    } else if (c != config) {
      return {false, "",
              "vertex " + std::to_string(v) + " has configuration (" + c +
                  ") but vertex 0 has (" + config + ")"};
    }
  }
  return {true, config, ""};
}

SequenceReport iterate(const Polyhedron& p, int k, const Tolerance& tol) {
  if (k < 0) throw InvalidParameter("iterate: k must be >= 0");
  SequenceReport rep;
  Polyhedron cur = p;
  for (int step = 0; step <= k; ++step) {
    MeasureReport m = measure(cur, tol);
    SemiregularCheck sr = is_semiregular(cur, tol);
    SequenceStep s;
    s.k = step;
    s.fvector = cur.fvector();
    s.volume = m.volume;
    s.surface_area = m.surface_area;
    s.edge_min = m.edge_min;
    s.edge_max = m.edge_max;
    s.semiregular = sr.semiregular;
    s.vertex_config = sr.vertex_config;
    s.diagnosis = sr.diagnosis;
    for (const auto& face : cur.faces) s.face_degrees[static_cast<int>(face.size())]++;
    rep.steps.push_back(std::move(s));
    rep.shapes.push_back(cur);

    if (step == k) break;
    if (m.edge_min < tol.abs) {
      rep.truncated = true;
      break;
    }
    cur = rectify_polyhedron(cur, tol);
  }
  rep.purity_length = 0;
  while (rep.purity_length < static_cast<int>(rep.steps.size()) &&
         rep.steps[rep.purity_length].semiregular)
    ++rep.purity_length;
  return rep;
}

DisjointnessVerdict check_disjointness(int max_power) {
  if (max_power < 1) throw InvalidParameter("check_disjointness: max_power must be >= 1");
  if (max_power > 120)
    throw InvalidParameter("check_disjointness: max_power > 120 would overflow the 128-bit check");
  DisjointnessVerdict v;
  v.disjoint = true;
  for (int k = 0; k <= max_power && v.disjoint; ++k) {
    for (int x = 0; x <= max_power; ++x) {
      unsigned __int128 eta = (unsigned __int128)12 << k;
      unsigned __int128 xi = (unsigned __int128)30 << x;
      ++v.pairs_checked;
      if (eta == xi) {
        v.disjoint = false;
        v.collision = "2^" + std::to_string(k) + "*12 == 2^" + std::to_string(x) + "*30";
        break;
      }
    }
  }
  v.note = "a collision would force k - x = log(5)/log(2) - 1, which is irrational";
  return v;
}

}  // namespace rectihull
