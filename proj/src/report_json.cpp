#include "wreath/report_json.hpp"

namespace wreath {

Json to_json(const Quantity& q) {
  Json j;
  j["value"] = q.to_string();
  j["exact"] = q.is_exact();
  if (!q.is_exact()) j["log2"] = q.log2();
  return j;
}

Json to_json(const CountResult& r) {
  Json j;
  j["k"] = r.k;
  j["degree"] = r.degree;
  j["order"] = r.order.get_str();
  j["method"] = to_string(r.method);
  j["detail"] = r.detail;
  j["value"] = r.value.get_str();
  j["orbit_count"] = r.orbit_count ? Json(r.orbit_count->get_str()) : Json(nullptr);
  return j;
}

Json to_json(const OrbitStats& s) {
  Json j;
  j["total_orbits"] = s.total_orbits.get_str();
  j["nonregular_orbits"] = s.nonregular_orbits.get_str();
  j["delta_size"] = s.delta_size.get_str();
  j["nonregular_class_sum"] = s.nonregular_class_sum.get_str();
  j["max_sigma"] = s.max_sigma;
  return j;
}

Json to_json(const BoundReport& r) {
  Json j;
  j["name"] = r.name;
  j["lhs"] = r.lhs ? to_json(*r.lhs) : Json(nullptr);
  j["relation"] = r.relation;
  j["rhs"] = r.rhs ? to_json(*r.rhs) : Json(nullptr);
  j["holds"] = to_string(r.holds);
  j["mode"] = r.mode;
  j["asymptotic"] = r.asymptotic;
  if (!r.e_source.empty()) j["e_source"] = r.e_source;
  Json inputs = Json::object();
  for (const auto& [key, value] : r.inputs) inputs[key] = value;
  j["inputs"] = inputs;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

Json blocks_json(const std::vector<std::vector<Point>>& blocks) {
  Json j = Json::array();
  for (const auto& b : blocks) j.push_back(b);
  return j;
}

Json to_json(const SemiprimitiveReport& r) {
  Json j;
  j["degree"] = r.degree;
  j["r"] = r.r;
  j["blocks"] = blocks_json(r.blocks);
  j["order"] = r.order.get_str();
  j["kernel_order"] = r.kernel_order.get_str();
  j["quotient_order"] = r.quotient_order.get_str();
  j["kernel_semiregular"] = r.kernel_semiregular;
  j["e_kernel"] = r.e_kernel ? Json(r.e_kernel->get_str()) : Json(nullptr);
  Json reports = Json::array();
  for (const auto& b : r.reports) reports.push_back(to_json(b));
  j["reports"] = reports;
  return j;
}

Json to_json(const StructureReport& r) {
  Json j;
  j["transitive"] = r.transitive;
  j["semiregular"] = r.semiregular;
  j["primitive"] = r.primitive;
  j["semiprimitive"] = r.semiprimitive;
  j["normal_subgroup_count"] = r.normal_subgroup_count;
  return j;
}

Json to_json(const NumericInvariants& inv) {
  Json j;
  j["mu"] = inv.mu;
  j["b"] = inv.b;
  j["max_sigma"] = inv.max_sigma;
  j["e"] = inv.e ? Json(inv.e->get_str()) : Json(nullptr);
  return j;
}

Json to_json(const BlockDecomposition& bd) {
  Json j;
  j["r"] = bd.r;
  j["blocks"] = blocks_json(bd.blocks);
  j["kernel_order"] = bd.kernel_indices.size();
  j["quotient_order"] = bd.quotient.size();
  return j;
}

mpz_class count_from_json(const Json& j) {
  if (!j.is_string()) throw InvalidArgument("count must be a decimal string");
  const auto& s = j.get_ref<const std::string&>();
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw InvalidArgument("not a decimal count: '" + s + "'");
  return mpz_class(s, 10);
}

}  // namespace wreath
