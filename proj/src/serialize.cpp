#include "strpoly/serialize.hpp"

namespace strpoly {

namespace {

Json qvec_json(const QVec& v) {
  Json a = Json::array();
  for (const Q& q : v) a.push_back(q_to_string(q));
  return a;
}

}  // namespace

Json to_json(const RigorousPath& p) {
  Json j;
  j["source"] = p.source;
  j["wires"] = p.str();
  j["nodes"] = p.nodes;
  j["w_m"] = p.w_m;
  j["w_t"] = p.w_t;
  j["peaks"] = p.peaks;
  j["max_peak"] = p.max_peak;
  return j;
}

Json paths_json(const ReducedWord& word, const std::vector<RigorousPath>& paths) {
  Json j;
  j["word"] = word.str();
  j["count"] = paths.size();
  Json a = Json::array();
  for (const RigorousPath& p : paths) a.push_back(to_json(p));
  j["paths"] = a;
  return j;
}

Json to_json(const HPolytope& p) {
  Json j;
  j["dimension"] = p.d;
  j["coords"] = coords_name(p.coords);
  Json rows = Json::array();
  for (int r = 0; r < p.rows(); ++r) {
    Json row;
    row["a"] = qvec_json(p.A[r]);
    row["b"] = q_to_string(p.b[r]);
    row["tag"] = p.row_tags[r];
    rows.push_back(row);
  }
  j["rows"] = rows;
  return j;
}

Json to_json(const VertexSet& vs) {
  Json j;
  j["count"] = vs.vertices.size();
  j["integral"] = vs.integral;
  Json a = Json::array();
  for (const QVec& v : vs.vertices) a.push_back(qvec_json(v));
  j["vertices"] = a;
  return j;
}

Json ray_set_json(RaySet s, const std::vector<std::string>& labels) {
  Json a = Json::array();
  for (int r : ray_members(s)) a.push_back(labels[r]);
  return a;
}

Json to_json(const Fan& f) {
  Json j;
  j["dimension"] = f.d;
  Json rays = Json::array();
  for (int r = 0; r < f.ray_count(); ++r) {
    Json jr;
    jr["label"] = f.labels[r];
    jr["vector"] = f.rays[r];
    rays.push_back(jr);
  }
  j["rays"] = rays;
  j["max_cone_count"] = f.max_cones.size();
  return j;
}

Json to_json(const SmallIndices& s) {
  Json j;
  j["small"] = s.small;
  if (s.witness) {
    j["witness"] = {{"delta", delta_to_string(s.witness->delta)}, {"k", s.witness->k}};
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

Json to_json(const BpfViolation& v, const std::vector<std::string>& labels) {
  Json j;
  j["collection"] = ray_set_json(v.collection, labels);
  Json dec = Json::array();
  for (const auto& [r, c] : v.sum_decomposition) dec.push_back({{"ray", labels[r]}, {"coefficient", q_to_string(c)}});
  j["sum_decomposition"] = dec;
  j["lhs"] = q_to_string(v.lhs);
  j["rhs"] = q_to_string(v.rhs);
  j["lhs_terms"] = terms_string(v.lhs_terms);
  j["rhs_terms"] = terms_string(v.rhs_terms);
  return j;
}

Json to_json(const ResolutionVerdict& v) {
  Json j;
  j["word"] = v.word.str();
  j["witness"] = {{"delta", delta_to_string(v.norm.witness.delta)}, {"k", v.norm.witness.k}};
  j["canonical_word"] = v.norm.canonical.str();
  j["involuted"] = v.norm.involuted;
  j["node_map"] = v.norm.node_map;
  j["lambda"] = v.lambda;
  j["ray_count"] = v.ray_count;
  Json rays = Json::array();
  for (int r = 0; r < v.ray_count; ++r) rays.push_back({{"label", v.ray_labels[r]}, {"vector", v.rays[r]}});
  j["rays"] = rays;
  Json pcs = Json::array();
  for (RaySet P : v.primitive_collections) pcs.push_back(ray_set_json(P, v.ray_labels));
  j["primitive_collections"] = pcs;
  j["smooth"] = v.smooth;
  j["smooth_certified_by_determinants"] = v.smooth_certified_by_determinants;
  j["rays_match"] = v.rays_match;
  j["facets_certified"] = v.facets_certified;
  j["bpf"] = v.bpf;
  j["violation"] = v.violation ? to_json(*v.violation, v.ray_labels) : Json(nullptr);
  j["violation_count"] = v.violations.size();
  Json rel = Json::array();
  for (const Relation& r : v.relations) rel.push_back(r.str());
  j["relations"] = rel;
  j["status"] = v.status;
  return j;
}

Json bott_json(const BottData& b) {
  Json j;
  j["word"] = b.norm.input.str();
  j["canonical_word"] = b.norm.canonical.str();
  j["witness"] = {{"delta", delta_to_string(b.norm.witness.delta)}, {"k", b.norm.witness.k}};
  j["involuted"] = b.norm.involuted;
  j["node_map"] = b.norm.node_map;
  j["v"] = b.v;
  j["w"] = b.w;
  Json gam = Json::array();
  for (int idx : b.selection.gamma) gam.push_back(b.paths[idx].str());
  j["gamma"] = gam;
  Json left = Json::array();
  for (const auto& [i, idx] : b.selection.leftovers) left.push_back({{"label", i}, {"path", b.paths[idx].str()}});
  j["leftovers"] = left;
  return j;
}

Json to_json(const LaurentPotential& p) { return Json::parse(render(p, "json")); }

}  // namespace strpoly
