#include "domset/json_io.hpp"

namespace domset {

namespace {

template <typename T>
Json optional_value(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

Json lower_value(const std::optional<LowerBound>& lb) {
  return lb ? Json(lb->value) : Json(nullptr);
}

Json lower_raw(const std::optional<LowerBound>& lb) {
  return lb ? Json(lb->raw.to_string()) : Json(nullptr);
}

}  // namespace

Json to_json(const ParamTriple& p) { return Json::array({p.k(), p.kp(), p.kpp()}); }

ParamTriple triple_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 3) throw std::invalid_argument("triple must be a 3-element integer array");
  return ParamTriple(j.at(0).get<int>(), j.at(1).get<int>(), j.at(2).get<int>());
}

Json to_json(const BoundReport& r) {
  Json prior = Json::object();
  Json prior_raw = Json::object();
  for (const auto& [b, v] : r.prior) {
    const std::string key(to_string(b));
    prior[key] = v ? Json(v->value) : Json(nullptr);
    prior_raw[key] = v ? Json(v->raw.to_string()) : Json(nullptr);
  }
  Json applicability = Json::object();
  for (const auto& [name, ok] : r.applicability) applicability[name] = ok;

  Json j;
  j["triple"] = to_json(r.triple);
  j["n"] = r.n;
  j["m"] = r.m;
  j["delta"] = r.min_degree;
  j["Delta"] = r.max_degree;
  j["delta_star"] = optional_value(r.delta_star);
  j["lb_general"] = lower_value(r.lb_general);
  j["lb_general_raw"] = lower_raw(r.lb_general);
  j["lb_kp_zero"] = lower_value(r.lb_kp_zero);
  j["lb_kp_zero_raw"] = lower_raw(r.lb_kp_zero);
  j["prior"] = std::move(prior);
  j["prior_raw"] = std::move(prior_raw);
  j["ub_construct"] = optional_value(r.ub_construct);
  j["applicability"] = std::move(applicability);
  return j;
}

Json to_json(const SolveResult& r) {
  Json j;
  j["status"] = std::string(to_string(r.status));
  j["gamma"] = optional_value(r.gamma);
  j["witness"] = r.witness ? Json(r.witness->to_vector()) : Json(nullptr);
  j["nodes"] = r.nodes_explored;
  j["elapsed_ms"] = r.elapsed.count();
  return j;
}

Json to_json(const Construction& c, bool valid) {
  Json j;
  j["part"] = c.part;
  j["size"] = c.size();
  j["valid"] = valid;
  return j;
}

Json violations_to_json(const std::vector<Violation>& violations) {
  Json list = Json::array();
  for (const auto& v : violations) {
    Json e;
    e["vertex"] = v.vertex;
    e["condition"] = std::string(describe(v.condition));
    e["have"] = v.have;
    e["need"] = v.need;
    list.push_back(std::move(e));
  }
  Json j;
  j["dominating"] = violations.empty();
  j["violations"] = std::move(list);
  return j;
}

}  // namespace domset
