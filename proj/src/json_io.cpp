#include "polytess/json_io.hpp"

#include <stdexcept>

namespace polytess {

nlohmann::json rational_json(const Rational& r) {
  const auto [num, den] = rational_to_strings(r);
  return nlohmann::json::array({num, den});
}

Rational rational_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_string() || !j[1].is_string()) {
    throw std::invalid_argument("rational_from_json: expected [\"num\",\"den\"]");
  }
  return rational_from_strings(j[0].get<std::string>(), j[1].get<std::string>());
}

nlohmann::json vector_json(const RatVec& v) {
  nlohmann::json out = nlohmann::json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(rational_json(v(i)));
  return out;
}

RatVec vector_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("vector_from_json: expected array");
  RatVec v(static_cast<Eigen::Index>(j.size()));
  for (size_t i = 0; i < j.size(); ++i) {
    v(static_cast<Eigen::Index>(i)) = rational_from_json(j[i]);
  }
  return v;
}

nlohmann::json polytope_json(const VPolytope& p) {
  nlohmann::json verts = nlohmann::json::array();
  for (const RatVec& v : p.vertices) verts.push_back(vector_json(v));
  return {{"label", p.label}, {"ambient", p.ambient}, {"vertices", verts}};
}

nlohmann::json chain_json(const SimplexChain& c) {
  nlohmann::json simplices = nlohmann::json::array();
  for (const OrientedSimplex& s : c.simplices) {
    nlohmann::json verts = nlohmann::json::array();
    for (const RatVec& v : s.vertices) verts.push_back(vector_json(v));
    simplices.push_back({{"orientation", s.orientation}, {"vertices", verts}});
  }
  return {{"label", c.label}, {"ambient", c.ambient}, {"simplices", simplices}};
}

nlohmann::json report_json(const TessellationReport& r) {
  return {{"dim", r.dim},
          {"exact_volume_each", rational_json(r.exact_volume_each)},
          {"volume_sum", rational_json(r.volume_sum)},
          {"sample_count", r.sample_count},
          {"cover_violations", r.cover_violations},
          {"multi_assignment_count", r.multi_assignment_count},
          {"per_region_hits", r.per_region_hits},
          {"orbit_match", r.orbit_match},
          {"seed", r.seed},
          {"ok", r.ok}};
}

nlohmann::json report_json(const TilingReport& r) {
  return {{"dim", r.dim},
          {"sample_count", r.sample_count},
          {"skipped_ties", r.skipped_ties},
          {"violations", r.violations},
          {"centroid_in_all", r.centroid_in_all},
          {"ceiling_face_in_region", r.ceiling_face_in_region},
          {"seed", r.seed},
          {"ok", r.ok}};
}

nlohmann::json estimate_json(const MCEstimate& e) {
  return {{"estimate", e.estimate},
          {"stderr", e.std_error},
          {"samples", e.samples},
          {"seed", e.seed}};
}

}  // namespace polytess
