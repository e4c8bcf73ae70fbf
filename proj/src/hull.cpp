#include "rectihull/hull.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

namespace rectihull {

namespace {

double bbox_diag(std::span<const Vec3> pts) {
  Vec3 lo = pts[0], hi = pts[0];
  for (const Vec3& v : pts) {
    lo = {std::min(lo.x, v.x), std::min(lo.y, v.y), std::min(lo.z, v.z)};
    hi = {std::max(hi.x, v.x), std::max(hi.y, v.y), std::max(hi.z, v.z)};
  }
  return (hi - lo).norm();
}

std::vector<Vec3> dedupe(std::span<const Vec3> pts, double eps) {
  std::vector<Vec3> out;
  for (const Vec3& p : pts) {
    bool dup = false;
    for (const Vec3& q : out)
      if ((p - q).norm() <= eps) {
        dup = true;
        break;
      }
    if (!dup) out.push_back(p);
  }
  return out;
}

struct Tri {
  int a, b, c;
  Vec3 un;      // unit normal, outward
  double off;   // un . x = off on the plane
  double area;
  bool alive = true;
};

Tri make_tri(const std::vector<Vec3>& pts, int a, int b, int c) {
  Vec3 n = (pts[b] - pts[a]).cross(pts[c] - pts[a]);
  double ln = n.norm();
  Tri t{a, b, c, {}, 0.0, 0.5 * ln};
  if (ln > 0.0) {
    t.un = n / ln;
    t.off = t.un.dot((pts[a] + pts[b] + pts[c]) / 3.0);
  }
  return t;
}

struct TriHull {
  const std::vector<Vec3>& pts;
  std::vector<Tri> tris;
  double eps;  // visibility / coplanarity slack

  // directed edge -> triangle index, rebuilt lazily
  std::map<std::pair<int, int>, int> edge_owner;

  explicit TriHull(const std::vector<Vec3>& p, double eps_) : pts(p), eps(eps_) {}

  void rebuild_edges() {
    edge_owner.clear();
    for (size_t i = 0; i < tris.size(); ++i) {
      if (!tris[i].alive) continue;
      const Tri& t = tris[i];
      edge_owner[{t.a, t.b}] = static_cast<int>(i);
      edge_owner[{t.b, t.c}] = static_cast<int>(i);
      edge_owner[{t.c, t.a}] = static_cast<int>(i);
    }
  }

  int neighbor(int u, int v) const {
    auto it = edge_owner.find({v, u});
    return it == edge_owner.end() ? -1 : it->second;
  }

  // Returns false when a degenerate cone triangle would be produced (caller
  // defers the point and retries later).
  bool insert(int pi_unused, const Vec3& p) {
    (void)pi_unused;
    std::vector<double> dist(tris.size(), -1.0);
    int seed = -1;
    double best = eps;
    for (size_t i = 0; i < tris.size(); ++i) {
      if (!tris[i].alive) continue;
      dist[i] = tris[i].un.dot(p) - tris[i].off;
      if (dist[i] > best) {
        best = dist[i];
        seed = static_cast<int>(i);
      }
    }
    if (seed < 0) return true;  // inside or on the hull

    rebuild_edges();

    // flood the strictly visible region from the most visible face
    std::set<int> removal;
    std::deque<int> queue{seed};
    removal.insert(seed);
    auto flood = [&](double threshold) {
      while (!queue.empty()) {
        int ti = queue.front();
        queue.pop_front();
        const Tri& t = tris[ti];
        for (auto [u, v] : {std::pair{t.a, t.b}, {t.b, t.c}, {t.c, t.a}}) {
          int nb = neighbor(u, v);
          if (nb < 0 || removal.count(nb)) continue;
          if (dist[nb] > threshold) {
            removal.insert(nb);
            queue.push_back(nb);
          }
        }
      }
    };
    flood(eps);

    // Strictly visible faces disconnected from the seed, or a pinched
    // horizon, can only happen through coplanar faces; bridge across them.
    auto all_reached = [&]() {
      for (size_t i = 0; i < tris.size(); ++i)
        if (tris[i].alive && dist[i] > eps && !removal.count(static_cast<int>(i)))
          return false;
      return true;
    };
    auto horizon_simple = [&]() {
      std::map<int, int> outdeg;
      for (int ti : removal) {
        const Tri& t = tris[ti];
        for (auto [u, v] : {std::pair{t.a, t.b}, {t.b, t.c}, {t.c, t.a}}) {
          int nb = neighbor(u, v);
          if (nb >= 0 && !removal.count(nb) && ++outdeg[u] > 1) return false;
        }
      }
      return true;
    };
    if (!all_reached() || !horizon_simple()) {
      queue.assign(removal.begin(), removal.end());
      flood(-eps);
    }

    // horizon: directed edges of removed faces whose twin face survives
    std::vector<std::pair<int, int>> horizon;
    for (int ti : removal) {
      const Tri& t = tris[ti];
      for (auto [u, v] : {std::pair{t.a, t.b}, {t.b, t.c}, {t.c, t.a}}) {
        int nb = neighbor(u, v);
        if (nb < 0 || !removal.count(nb)) horizon.push_back({u, v});
      }
    }

    int new_vertex = static_cast<int>(&p - pts.data());
    std::vector<Tri> cone;
    cone.reserve(horizon.size());
    for (auto [u, v] : horizon) {
      Tri t = make_tri(pts, u, v, new_vertex);
      double len = std::max((pts[v] - pts[u]).norm(), (p - pts[u]).norm());
      if (t.area <= 0.5 * eps * len) return false;  // degenerate cone face
      cone.push_back(t);
    }
    for (int ti : removal) tris[ti].alive = false;
    for (Tri& t : cone) tris.push_back(t);
    return true;
  }
};

// Initial affinely independent quadruple; throws DegenerateInput with the
// achieved rank.
std::array<int, 4> initial_simplex(const std::vector<Vec3>& pts, double eps) {
  int n = static_cast<int>(pts.size());
  int i0 = 0;
  for (int i = 1; i < n; ++i) {
    const Vec3 &a = pts[i], &b = pts[i0];
    if (std::tie(a.x, a.y, a.z) < std::tie(b.x, b.y, b.z)) i0 = i;
  }
  int i1 = -1;
  double best = eps;
  for (int i = 0; i < n; ++i) {
    double d = (pts[i] - pts[i0]).norm();
    if (d > best) {
      best = d;
      i1 = i;
    }
  }
  if (i1 < 0) throw DegenerateInput("all points coincide (affine rank 0)", 0);

  Vec3 dir = (pts[i1] - pts[i0]).normalized();
  int i2 = -1;
  best = eps;
  for (int i = 0; i < n; ++i) {
    Vec3 d = pts[i] - pts[i0];
    double off = (d - dir * dir.dot(d)).norm();
    if (off > best) {
      best = off;
      i2 = i;
    }
  }
  if (i2 < 0) throw DegenerateInput("all points collinear (affine rank 1)", 1);

  Vec3 un = (pts[i1] - pts[i0]).cross(pts[i2] - pts[i0]).normalized();
  int i3 = -1;
  best = eps;
  for (int i = 0; i < n; ++i) {
    double off = std::abs(un.dot(pts[i] - pts[i0]));
    if (off > best) {
      best = off;
      i3 = i;
    }
  }
  if (i3 < 0) throw DegenerateInput("all points coplanar (affine rank 2)", 2);
  return {i0, i1, i2, i3};
}

struct DisjointSet {
  std::vector<int> parent;
  explicit DisjointSet(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Merge coplanar adjacent triangles into maximal facets and walk their
// boundary cycles.
Polyhedron assemble(const std::vector<Vec3>& pts, std::vector<Tri>& tris,
                    double merge_eps) {
  std::vector<int> live;
  for (size_t i = 0; i < tris.size(); ++i)
    if (tris[i].alive) live.push_back(static_cast<int>(i));

  std::map<std::pair<int, int>, int> owner;  // directed edge -> position in live
  for (size_t k = 0; k < live.size(); ++k) {
    const Tri& t = tris[live[k]];
    owner[{t.a, t.b}] = static_cast<int>(k);
    owner[{t.b, t.c}] = static_cast<int>(k);
    owner[{t.c, t.a}] = static_cast<int>(k);
  }

  DisjointSet ds(static_cast<int>(live.size()));
  auto coplanar = [&](const Tri& s, const Tri& t) {
    const Tri& ref = s.area >= t.area ? s : t;
    for (int i : {s.a, s.b, s.c, t.a, t.b, t.c})
      if (std::abs(ref.un.dot(pts[i]) - ref.off) > merge_eps) return false;
    return true;
  };
  for (size_t k = 0; k < live.size(); ++k) {
    const Tri& t = tris[live[k]];
    for (auto [u, v] : {std::pair{t.a, t.b}, {t.b, t.c}, {t.c, t.a}}) {
      auto it = owner.find({v, u});
      if (it == owner.end() || static_cast<size_t>(it->second) <= k) continue;
      if (coplanar(t, tris[live[it->second]])) ds.unite(static_cast<int>(k), it->second);
    }
  }

  std::map<int, std::vector<int>> groups;
  for (size_t k = 0; k < live.size(); ++k)
    groups[ds.find(static_cast<int>(k))].push_back(static_cast<int>(k));

  std::vector<std::vector<int>> cycles;
  for (const auto& [root, members] : groups) {
    std::set<std::pair<int, int>> edges;
    for (int k : members) {
      const Tri& t = tris[live[k]];
      for (auto e : {std::pair{t.a, t.b}, {t.b, t.c}, {t.c, t.a}}) edges.insert(e);
    }
    std::map<int, int> next;
    for (auto [u, v] : edges) {
      if (edges.count({v, u})) continue;  // interior to the facet
      if (next.count(u))
        throw std::runtime_error("hull3: non-simple facet boundary");
      next[u] = v;
    }
    if (next.size() < 3) throw std::runtime_error("hull3: facet boundary too short");
    std::vector<int> cycle;
    int start = next.begin()->first;
    int cur = start;
    do {
      cycle.push_back(cur);
      auto it = next.find(cur);
      if (it == next.end()) throw std::runtime_error("hull3: open facet boundary");
      cur = it->second;
    } while (cur != start && cycle.size() <= next.size());
    if (cur != start || cycle.size() != next.size())
      throw std::runtime_error("hull3: facet boundary is not a single cycle");
    cycles.push_back(std::move(cycle));
  }

  // drop cycle vertices that sit on a straight boundary segment
  for (auto& cycle : cycles) {
    std::vector<int> cleaned;
    int m = static_cast<int>(cycle.size());
    for (int i = 0; i < m; ++i) {
      Vec3 u = pts[cycle[i]] - pts[cycle[(i + m - 1) % m]];
      Vec3 w = pts[cycle[(i + 1) % m]] - pts[cycle[i]];
      if (u.cross(w).norm() > 1e-9 * u.norm() * w.norm())
        cleaned.push_back(cycle[i]);
    }
    if (cleaned.size() >= 3) cycle = std::move(cleaned);
  }

  // keep only referenced points, preserving input order
  std::vector<int> remap(pts.size(), -1);
  Polyhedron out;
  for (const auto& cycle : cycles)
    for (int i : cycle)
      if (remap[i] < 0) {
        remap[i] = -2;  // referenced
      }
  for (size_t i = 0; i < pts.size(); ++i)
    if (remap[i] == -2) {
      remap[i] = static_cast<int>(out.vertices.size());
      out.vertices.push_back(pts[i]);
    }
  for (const auto& cycle : cycles) {
    std::vector<int> face;
    face.reserve(cycle.size());
    for (int i : cycle) face.push_back(remap[i]);
    out.faces.push_back(std::move(face));
  }
  return out;
}

}  // namespace

Polyhedron hull3(std::span<const Vec3> points, const Tolerance& tol) {
  if (points.size() < 4)
    throw DegenerateInput("hull3 needs at least 4 points", points.empty() ? 0 : 2);
  for (const Vec3& p : points)
    if (!p.finite()) throw InvalidParameter("hull3: non-finite input point");

  double scale = bbox_diag(points);
  double eps = tol.merge(scale);
  std::vector<Vec3> pts = dedupe(points, eps);
  if (pts.size() < 4) throw DegenerateInput("hull3: fewer than 4 distinct points", 2);

  auto simplex = initial_simplex(pts, eps);
  TriHull hull(pts, eps);
  auto [i0, i1, i2, i3] = simplex;
  Vec3 un = (pts[i1] - pts[i0]).cross(pts[i2] - pts[i0]);
  if (un.dot(pts[i3] - pts[i0]) > 0.0) std::swap(i1, i2);
  hull.tris.push_back(make_tri(pts, i0, i1, i2));
  hull.tris.push_back(make_tri(pts, i0, i3, i1));
  hull.tris.push_back(make_tri(pts, i1, i3, i2));
  hull.tris.push_back(make_tri(pts, i0, i2, i3));

  std::vector<int> order;
  for (int i = 0; i < static_cast<int>(pts.size()); ++i)
    if (i != i0 && i != i1 && i != i2 && i != i3) order.push_back(i);

  std::vector<int> deferred;
  for (int i : order)
    if (!hull.insert(i, pts[i])) deferred.push_back(i);
  for (int i : deferred)
    if (!hull.insert(i, pts[i]))
      throw std::runtime_error("hull3: degenerate configuration while coning");

  return assemble(pts, hull.tris, eps);
}

Polygon hull2(std::span<const Vec2> points, const Tolerance& tol) {
  if (points.size() < 3) throw DegenerateInput("hull2 needs at least 3 points", 1);
  std::vector<Vec2> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end(), [](const Vec2& a, const Vec2& b) {
    return std::tie(a.x, a.y) < std::tie(b.x, b.y);
  });
  pts.erase(std::unique(pts.begin(), pts.end(), [&](const Vec2& a, const Vec2& b) {
              return (a - b).norm() <= tol.rel * std::max(a.norm(), b.norm());
            }),
            pts.end());
  if (pts.size() < 3) throw DegenerateInput("hull2: fewer than 3 distinct points", 1);

  // monotone chain with scale-free collinearity
  auto turns_left = [&](const Vec2& a, const Vec2& b, const Vec2& c) {
    Vec2 u = b - a, w = c - b;
    return u.cross(w) > tol.rel * u.norm() * w.norm();
  };
  auto build = [&](auto begin, auto end) {
    std::vector<Vec2> chain;
    for (auto it = begin; it != end; ++it) {
      while (chain.size() >= 2 &&
             !turns_left(chain[chain.size() - 2], chain.back(), *it))
        chain.pop_back();
      chain.push_back(*it);
    }
    return chain;
  };
  std::vector<Vec2> lower = build(pts.begin(), pts.end());
  std::vector<Vec2> upper = build(pts.rbegin(), pts.rend());
  lower.pop_back();
  upper.pop_back();
  lower.insert(lower.end(), upper.begin(), upper.end());
  if (lower.size() < 3) throw DegenerateInput("hull2: all points collinear", 1);
  return Polygon{std::move(lower)};
}

HRep to_hrep(const Polyhedron& p, const Tolerance& tol) {
  require_valid(p, tol);
  HRep h;
  h.interior_point = p.vertex_centroid();
  for (const auto& face : p.faces) {
    Vec3 n, c;
    for (size_t i = 0; i < face.size(); ++i) {
      n += p.vertices[face[i]].cross(p.vertices[face[(i + 1) % face.size()]]);
      c += p.vertices[face[i]];
    }
    Vec3 un = n.normalized();
    h.halfspaces.push_back({un, un.dot(c / static_cast<double>(face.size()))});
  }
  return h;
}

Polyhedron intersect_hrep(const HRep& h, const Tolerance& tol) {
  if (h.halfspaces.size() < 4)
    throw UnboundedError("intersect_hrep: fewer than 4 halfspaces is unbounded");
  // nearly parallel constraints (e.g. from intersecting two almost coincident
  // polyhedra) destabilize the dual hull; keep only the tighter of each pair
  std::vector<Vec3> unit_normals;
  std::vector<double> offsets;
  for (const HalfSpace& hs : h.halfspaces) {
    double nn = hs.normal.norm();
    if (nn <= tol.abs)
      throw UnboundedError("intersect_hrep: zero normal in constraint set");
    Vec3 u = hs.normal / nn;
    double b = (hs.offset - hs.normal.dot(h.interior_point)) / nn;
    if (b <= tol.abs)
      throw UnboundedError("intersect_hrep: interior point is not strictly interior");
    bool merged = false;
    for (size_t i = 0; i < unit_normals.size(); ++i) {
      if ((unit_normals[i] - u).norm() <= 1e-9) {
        offsets[i] = std::min(offsets[i], b);
        merged = true;
        break;
      }
    }
    if (!merged) {
      unit_normals.push_back(u);
      offsets.push_back(b);
    }
  }
  if (unit_normals.size() < 4)
    throw UnboundedError("intersect_hrep: fewer than 4 distinct halfspaces is unbounded");
  std::vector<Vec3> dual;
  dual.reserve(unit_normals.size());
  for (size_t i = 0; i < unit_normals.size(); ++i)
    dual.push_back(unit_normals[i] / offsets[i]);

  Polyhedron dual_hull;
  try {
    dual_hull = hull3(dual, tol);
  } catch (const DegenerateInput&) {
    throw UnboundedError("intersect_hrep: constraint set is unbounded (degenerate dual)");
  }

  double dual_scale = dual_hull.scale();
  std::vector<Vec3> primal;
  for (const auto& face : dual_hull.faces) {
    Vec3 n, c;
    double diam = 0.0;
    for (size_t i = 0; i < face.size(); ++i) {
      const Vec3& a = dual_hull.vertices[face[i]];
      const Vec3& b = dual_hull.vertices[face[(i + 1) % face.size()]];
      n += a.cross(b);
      c += a;
      diam = std::max(diam, (b - a).norm());
    }
    // sliver facets (from nearly coincident constraints) have ill-conditioned
    // planes; their primal vertices coincide with those of the neighbors
    if (0.5 * n.norm() <= 1e-6 * diam * diam) continue;
    Vec3 un = n.normalized();
    double off = un.dot(c / static_cast<double>(face.size()));
    if (off <= tol.merge(dual_scale) * 1e-3)
      throw UnboundedError("intersect_hrep: constraint set is unbounded");
    primal.push_back(un / off + h.interior_point);
  }
  if (primal.size() < 4)
    throw UnboundedError("intersect_hrep: constraint set is unbounded or flat");
  return hull3(primal, tol);
}

Polyhedron intersect(const Polyhedron& a, const Polyhedron& b,
                     const Vec3& interior, const Tolerance& tol) {
  HRep ha = to_hrep(a, tol), hb = to_hrep(b, tol);
  HRep combined;
  combined.interior_point = interior;
  combined.halfspaces = ha.halfspaces;
  combined.halfspaces.insert(combined.halfspaces.end(), hb.halfspaces.begin(),
                             hb.halfspaces.end());
  return intersect_hrep(combined, tol);
}

}  // namespace rectihull
