// Acceptance gate: one pass/fail line per criterion, nonzero exit on failure.
// All tolerances are pinned here.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <vector>

#include "rectihull/measure.hpp"
#include "rectihull/polar.hpp"
#include "rectihull/rectify.hpp"

using namespace rectihull;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int idx, bool ok, const char* desc) {
  std::printf("[%s] criterion %2d: %s\n", ok ? "PASS" : "FAIL", idx, desc);
  if (!ok) ++failures;
}

bool close_rel(double a, double b, double rel) {
  return std::abs(a - b) <= rel * std::max(std::abs(a), std::abs(b));
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// 1. k-fold polygon rectification areas match ((1 - cos theta_n)/2)^k,
//    n = 3..12, k = 0..6, rel 1e-9, under one second.
void criterion1() {
  auto t0 = Clock::now();
  bool ok = true;
  for (int n = 3; n <= 12; ++n) {
    Polygon p = seed_polygon(n);
    for (int k = 0; k <= 6; ++k) {
      if (!close_rel(p.area(), polygon_area_closed(n, k), 1e-9)) ok = false;
      p = rectify_polygon(p);
    }
  }
  if (seconds_since(t0) >= 1.0) ok = false;
  report(1, ok, "measured k-fold rectified areas match ((1-cos theta)/2)^k "
                "(n=3..12, k=0..6, rel 1e-9, <1s)");
}

// 2./3. partial sums of measured areas/perimeters over k = 0..200 against the
// closed series totals. The geometric tail beyond k = 200 itself exceeds 1e-9
// for the larger n, so the totals are compared with the closed tail
// total * r^201 subtracted (r = area resp. side ratio of the series).
void criteria2and3() {
  bool area_ok = true, perim_ok = true;
  for (int n = 3; n <= 12; ++n) {
    PolygonSeries s = polygon_series(n, 200);
    double area_ratio = polygon_area_closed(n, 1);
    double side_ratio = std::cos(M_PI / n);
    double area_expected =
        s.area_total_closed * (1.0 - std::pow(area_ratio, 201));
    double perim_expected =
        s.perimeter_total_closed * (1.0 - std::pow(side_ratio, 201));
    if (std::abs(s.area_total_measured - area_expected) >
        1e-9 * s.area_total_closed)
      area_ok = false;
    if (std::abs(s.perimeter_total_measured - perim_expected) >
        1e-9 * s.perimeter_total_closed)
      perim_ok = false;
  }
  report(2, area_ok, "sum of measured areas k=0..200 matches 2/(1+cos theta) "
                     "minus the closed geometric tail (rel 1e-9)");
  report(3, perim_ok, "sum of measured perimeters k=0..200 matches "
                      "2 sqrt(n tan(pi/n))/(1-|cos(pi/n)|) minus the closed "
                      "geometric tail (rel 1e-9)");
}

// 4. integer f-vector chains from the tetrahedron and icosahedron.
void criterion4() {
  SequenceReport tet = iterate(seed_polyhedron("tetrahedron"), 2);
  SequenceReport ico = iterate(seed_polyhedron("icosahedron"), 2);
  bool ok = tet.steps.size() == 3 && ico.steps.size() == 3 &&
            tet.steps[0].fvector == FVector{4, 6, 4} &&
            tet.steps[1].fvector == FVector{6, 12, 8} &&
            tet.steps[2].fvector == FVector{12, 24, 14} &&
            ico.steps[0].fvector == FVector{12, 30, 20} &&
            ico.steps[1].fvector == FVector{30, 60, 32} &&
            ico.steps[2].fvector == FVector{60, 120, 62};
  report(4, ok, "f-vector chains (4,6,4)->(6,12,8)->(12,24,14) and "
                "(12,30,20)->(30,60,32)->(60,120,62), exact integers");
}

// 5. the icosahedron and dodecahedron rectify to the same shape class.
void criterion5() {
  Polyhedron a = rectify_polyhedron(seed_polyhedron("icosahedron"));
  Polyhedron b = rectify_polyhedron(seed_polyhedron("dodecahedron"));
  bool ok = a.fvector() == FVector{30, 60, 32} && b.fvector() == a.fvector();
  std::map<int, int> da, db;
  for (const auto& f : a.faces) da[(int)f.size()]++;
  for (const auto& f : b.faces) db[(int)f.size()]++;
  std::map<int, int> want = {{3, 20}, {5, 12}};
  if (da != want || db != want) ok = false;
  std::vector<double> ea = edge_lengths(a), eb = edge_lengths(b);
  std::sort(ea.begin(), ea.end());
  std::sort(eb.begin(), eb.end());
  double ra = a.circumradius(), rb = b.circumradius();
  if (ea.size() != eb.size()) ok = false;
  for (size_t i = 0; ok && i < ea.size(); ++i)
    if (!close_rel(ea[i] / ra, eb[i] / rb, 1e-9)) ok = false;
  report(5, ok, "R1[icosahedron] and R1[dodecahedron]: f-vector (30,60,32), "
                "faces {20x3, 12x5}, equal normalized edge spectra (rel 1e-9)");
}

// 6. no collision 2^k*12 = 2^x*30 for 0 <= k,x <= 60, exact integers, <1ms.
void criterion6() {
  auto t0 = Clock::now();
  DisjointnessVerdict v = check_disjointness(60);
  double dt = seconds_since(t0);
  report(6, v.disjoint && v.pairs_checked == 61 * 61 && dt < 1e-3,
         "2^k*12 != 2^x*30 for all 0 <= k,x <= 60 (exact integers, <1ms)");
}

// 7. vol(P) - sum of vertex caps = vol(R1[P]) on the platonics and prisms.
void criterion7() {
  bool ok = true;
  std::vector<Polyhedron> shapes;
  for (const char* name : {"tetrahedron", "cube", "octahedron", "icosahedron",
                           "dodecahedron"})
    shapes.push_back(seed_polyhedron(name));
  for (int n = 3; n <= 8; ++n) shapes.push_back(seed_polyhedron("prism", n));
  for (const Polyhedron& p : shapes) {
    double decomposed = volume_by_cap_decomposition(p);
    double direct = volume(rectify_polyhedron(p));
    if (!close_rel(decomposed, direct, 1e-9)) ok = false;
  }
  report(7, ok, "vol(P) - sum of vertex caps = vol(R1[P]) on platonics and "
                "prisms n=3..8 (rel 1e-9)");
}

// 8. rectified-prism volume: the per-cap expression s^2 sin(theta)/48 is
// right, the printed one-cap total 1 - s^2 sin(theta)/48 is not; the direct
// hull volume equals 1 - 2n * s^2 sin(theta)/48 instead.
void criterion8() {
  bool ok = true;
  for (int n = 3; n <= 12; ++n) {
    PrismRectVolumeReport r = prism_rect_volume_report(n);
    double cap_expected =
        unit_area_side_sq(n) * std::sin(interior_angle(n)) / 48.0;
    if (!close_rel(r.per_cap, cap_expected, 1e-9)) ok = false;
    if (!r.decomposition_matches_direct) ok = false;
    if (r.literal_matches_direct) ok = false;  // must NOT reproduce
    if (!close_rel(r.direct, 1.0 - 2.0 * n * r.per_cap, 1e-9)) ok = false;
    if (r.note.empty()) ok = false;  // the discrepancy must be stated
  }
  // spot value: square prism 5/6 versus the printed 47/48
  PrismRectVolumeReport r4 = prism_rect_volume_report(4);
  if (!close_rel(r4.direct, 5.0 / 6.0, 1e-9)) ok = false;
  if (!close_rel(r4.literal_formula, 47.0 / 48.0, 1e-12)) ok = false;
  report(8, ok, "rectified prism volume is 1 - 2n s^2 sin(theta)/48, not the "
                "one-cap total (cube: 5/6 vs 47/48); discrepancy reported");
}

// 9. pinned volume ratios at 1e-12.
void criterion9() {
  Polyhedron tet = seed_polyhedron("tetrahedron");
  double ratio = volume(rectify_polyhedron(tet)) / volume(tet);
  double cube_r1 = volume(rectify_polyhedron(seed_polyhedron("cube")));
  report(9, close_rel(ratio, 0.5, 1e-12) && close_rel(cube_r1, 5.0 / 6.0, 1e-12),
         "vol(R1[tetra])/vol(tetra) = 1/2 and vol(R1[unit cube]) = 5/6 "
         "(rel 1e-12)");
}

// 10. polar-duality suite: biduality, pinned Mahler volumes, scale invariance.
void criterion10() {
  bool ok = true;
  std::vector<Polyhedron> shapes;
  for (const char* name : {"tetrahedron", "cube", "octahedron", "icosahedron",
                           "dodecahedron"})
    shapes.push_back(seed_polyhedron(name));
  for (int n = 3; n <= 6; ++n) shapes.push_back(seed_polyhedron("prism", n));
  for (const Polyhedron& p : shapes) {
    Polyhedron centered = p.translated(-centroid(p));
    Polyhedron back = polar_dual(polar_dual(centered));
    if (back.fvector() != centered.fvector()) ok = false;
    for (const Vec3& v : back.vertices) {
      double best = 1e300;
      for (const Vec3& w : centered.vertices)
        best = std::min(best, (v - w).norm());
      if (best >= 1e-9) ok = false;
    }
  }
  Polyhedron cube = seed_polyhedron("cube").scaled(2.0);
  if (std::abs(mahler_volume(cube) - 32.0 / 3.0) > 1e-9) ok = false;
  Polyhedron tet = seed_polyhedron("tetrahedron");
  Polyhedron tet_centered = tet.translated(-centroid(tet));
  if (std::abs(mahler_volume(tet_centered) - 64.0 / 9.0) > 1e-9) ok = false;
  if (!close_rel(mahler_volume(cube.scaled(2.0)), mahler_volume(cube), 1e-12))
    ok = false;
  report(10, ok, "biduality round trip (<1e-9 displacement), Mahler volumes "
                 "32/3 (cube) and 64/9 (tetra) +-1e-9, scale invariant to "
                 "1e-12");
}

// 11. conjecture probes: cube lambda* = 2 for [-1,1]^3 within 1e-6 with
// residual < 1e-7; tetra conj3 residual < 1e-7; tetra similarity fit
// residual < 1e-9. Each probe under five seconds.
void criterion11() {
  bool ok = true;
  auto t0 = Clock::now();
  ProbeResult cube = probe_conjecture3(seed_polyhedron("cube").scaled(2.0));
  if (seconds_since(t0) >= 5.0) ok = false;
  if (std::abs(cube.lambda - 2.0) > 1e-6 || cube.residual >= 1e-7) ok = false;
  if (cube.verdict != Verdict::HoldsNumerically) ok = false;

  t0 = Clock::now();
  ProbeResult tet3 = probe_conjecture3(seed_polyhedron("tetrahedron"));
  if (seconds_since(t0) >= 5.0) ok = false;
  if (tet3.residual >= 1e-7 || tet3.verdict != Verdict::HoldsNumerically)
    ok = false;

  t0 = Clock::now();
  Polyhedron tet = seed_polyhedron("tetrahedron");
  ProbeResult fit = fit_lambda_similarity(
      rectify_polyhedron(tet), rectify_polyhedron(polar_dual(tet)));
  if (seconds_since(t0) >= 5.0) ok = false;
  if (fit.residual >= 1e-9 || fit.verdict != Verdict::HoldsNumerically)
    ok = false;
  report(11, ok, "probes: cube lambda* = 2 +-1e-6 with residual < 1e-7, tetra "
                 "residual < 1e-7, similarity fit residual < 1e-9, each < 5s");
}

// 12. purity detection over the tetrahedron chain.
void criterion12() {
  SequenceReport rep = iterate(seed_polyhedron("tetrahedron"), 3);
  bool ok = rep.steps.size() == 4;
  for (int k = 0; ok && k <= 2; ++k)
    if (!rep.steps[k].semiregular) ok = false;
  if (ok) {
    const SequenceStep& last = rep.steps[3];
    if (last.semiregular) ok = false;
    if (last.diagnosis.find("rectangular") == std::string::npos) ok = false;
  }
  report(12, ok, "iterate(tetra,3): steps 0-2 semiregular, step 3 fails with "
                 "a non-square rectangular face named in the diagnosis");
}

}  // namespace

int main() {
  criterion1();
  criteria2and3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  criterion10();
  criterion11();
  criterion12();
  std::printf("%s: %d criteria failed\n", failures ? "FAILURE" : "SUCCESS",
              failures);
  return failures ? 1 : 0;
}
