#pragma once

#include <json.hpp>

#include "rectihull/measure.hpp"
#include "rectihull/polar.hpp"
#include "rectihull/rectify.hpp"

// JSON views of the report types; field names are stable.
namespace rectihull {

inline void to_json(nlohmann::json& j, const FVector& fv) {
  j = nlohmann::json{fv.v, fv.e, fv.f};
}

inline void to_json(nlohmann::json& j, const Vec3& v) {
  j = nlohmann::json{v.x, v.y, v.z};
}

inline void to_json(nlohmann::json& j, const ValidationReport& r) {
  j = nlohmann::json::object();
  j["valid"] = r.valid;
  j["checks"] = nlohmann::json::array();
  for (const auto& c : r.checks)
    j["checks"].push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
}

inline void to_json(nlohmann::json& j, const MeasureReport& m) {
  j = {{"fvector", m.fvector},
       {"volume", m.volume},
       {"surface_area", m.surface_area},
       {"centroid", m.centroid},
       {"edge_min", m.edge_min},
       {"edge_mean", m.edge_mean},
       {"edge_max", m.edge_max},
       {"face_areas", m.face_areas}};
}

inline void to_json(nlohmann::json& j, const SequenceStep& s) {
  j = {{"k", s.k},
       {"fvector", s.fvector},
       {"volume", s.volume},
       {"surface_area", s.surface_area},
       {"edge_min", s.edge_min},
       {"edge_max", s.edge_max},
       {"semiregular", s.semiregular},
       {"vertex_config", s.vertex_config}};
  if (!s.diagnosis.empty()) j["diagnosis"] = s.diagnosis;
  nlohmann::json degrees = nlohmann::json::object();
  for (const auto& [deg, count] : s.face_degrees)
    degrees[std::to_string(deg)] = count;
  j["face_degrees"] = degrees;
}

inline void to_json(nlohmann::json& j, const SequenceReport& r) {
  j = {{"steps", r.steps},
       {"purity_length", r.purity_length},
       {"truncated", r.truncated}};
}

inline void to_json(nlohmann::json& j, const PolygonSeriesStep& s) {
  j = {{"k", s.k},
       {"side_closed", s.side_closed},
       {"side_measured", s.side_measured},
       {"area_closed", s.area_closed},
       {"area_measured", s.area_measured},
       {"perimeter_measured", s.perimeter_measured}};
}

inline void to_json(nlohmann::json& j, const PolygonSeries& s) {
  j = {{"n", s.n},
       {"steps", s.steps},
       {"area_total_closed", s.area_total_closed},
       {"area_total_measured", s.area_total_measured},
       {"perimeter_total_closed", s.perimeter_total_closed},
       {"perimeter_total_measured", s.perimeter_total_measured},
       {"max_deviation", s.max_deviation}};
}

inline void to_json(nlohmann::json& j, const PrismRectVolumeReport& r) {
  j = {{"n", r.n},
       {"side_sq", r.side_sq},
       {"per_cap", r.per_cap},
       {"literal_formula", r.literal_formula},
       {"decomposition", r.decomposition},
       {"direct", r.direct},
       {"literal_matches_direct", r.literal_matches_direct},
       {"decomposition_matches_direct", r.decomposition_matches_direct},
       {"note", r.note}};
}

inline void to_json(nlohmann::json& j, const ProbeResult& r) {
  j = {{"probe", r.probe},
       {"lambda", r.lambda},
       {"residual", r.residual},
       {"verdict", verdict_name(r.verdict)},
       {"volumes", r.values},
       {"hausdorff_estimate", r.hausdorff_estimate},
       {"note", r.note}};
  if (r.has_intersection_fvector) j["intersection_fvector"] = r.intersection_fvector;
}

inline void to_json(nlohmann::json& j, const DisjointnessVerdict& v) {
  j = {{"disjoint", v.disjoint},
       {"pairs_checked", v.pairs_checked},
       {"note", v.note}};
  if (!v.collision.empty()) j["collision"] = v.collision;
}

}  // namespace rectihull
