#pragma once

#include <map>

#include "rectihull/core.hpp"

namespace rectihull {

// Polar dual {y : y.x <= 1 for all x in P}. The input is translated to its
// volume centroid before dualizing (polarity needs a center; the centroid is
// the canonical affine-equivariant choice).
Polyhedron polar_dual(const Polyhedron& p, const Tolerance& tol = {});

// vol(P) * vol(P°), with P centroid-centered.
double mahler_volume(const Polyhedron& p, const Tolerance& tol = {});

// Symmetric-difference volume of two convex bodies that both strictly
// contain the origin.
double symmetric_difference_volume(const Polyhedron& a, const Polyhedron& b,
                                   const Tolerance& tol = {});

enum class Verdict { HoldsNumerically, Fails, Inconclusive };
std::string verdict_name(Verdict v);

struct ProbeResult {
  std::string probe;
  double lambda = 0.0;
  double residual = 0.0;  // symmetric-difference volume / reference volume
  Verdict verdict = Verdict::Inconclusive;
  std::map<std::string, double> values;
  double hausdorff_estimate = 0.0;  // sampled support-function gap, diagnostic
  FVector intersection_fvector;     // conjecture-3 probe only
  bool has_intersection_fvector = false;
  std::string note;
};

// Residual thresholds separating float noise from genuine mismatch.
inline constexpr double kHoldsThreshold = 1e-7;
inline constexpr double kFailsThreshold = 1e-3;

// Best similarity scale: minimizes vol(a Δ λb) by golden section, initialized
// at (vol(a)/vol(b))^(1/3). Both bodies are centroid-centered first.
ProbeResult fit_lambda_similarity(const Polyhedron& a, const Polyhedron& b,
                                  const Tolerance& tol = {});

// Minimizes vol((λP° ∩ P) Δ R1[P]) over λ.
ProbeResult probe_conjecture3(const Polyhedron& p, const Tolerance& tol = {});

// Checks vol(R1[P]) >= sqrt(32λ/3) with λ from the similarity fit of R1[P]
// against R1[P°], and independently whether the Mahler volume of R1[P] is
// >= 32/3. Inconclusive when the similarity hypothesis does not hold.
ProbeResult check_lemma1(const Polyhedron& p, const Tolerance& tol = {});

}  // namespace rectihull
