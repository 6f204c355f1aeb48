#include "omega/report.hpp"

#include <cmath>

namespace omega {

namespace {

Json num(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

Json named_values(const std::vector<NamedValue>& v) {
  Json o = Json::object();
  for (const auto& nv : v) o[nv.name] = num(nv.value);
  return o;
}

}  // namespace

Json to_json(const BoundSpec& b) {
  return Json{{"name", b.name}, {"c", num(b.c)}, {"p", num(b.p)}, {"k", num(b.k)}, {"log_x0", num(b.log_x0)}};
}

Json to_json(const PipelineReport& r) {
  Json nodes = Json::array();
  for (const auto& n : r.nodes) {
    nodes.push_back(Json{{"name", n.name},
                         {"formula", n.formula},
                         {"inputs", named_values(n.inputs)},
                         {"c", num(n.spec.c)},
                         {"p", num(n.spec.p)},
                         {"k", num(n.spec.k)},
                         {"log_x0", num(n.spec.log_x0)},
                         {"target", n.target ? num(*n.target) : Json(nullptr)},
                         {"met", n.met ? Json(*n.met) : Json(nullptr)}});
  }
  return Json{{"nodes", nodes}, {"all_met", r.all_met}};
}

Json to_json(const IterationResult& s) {
  Json conds = Json::array();
  for (int i = 0; i < 5; ++i)
    conds.push_back(Json{{"condition", kSideConditionNames[i]}, {"holds", s.conditions[i]}, {"margin", num(s.margins[i])}});
  return Json{{"A", num(s.A)},     {"alpha", s.alpha.str()}, {"B", num(s.B)},          {"beta", s.beta},
              {"D", num(s.D)},     {"lambda_lower", num(s.lambda_lower)},             {"lambda", num(s.lambda)},
              {"lambda1", num(s.lambda1)},                   {"log_y", num(s.log_y)},   {"q0", num(s.q0)},
              {"f0", num(s.f0)},   {"fq0", num(s.fq0)},      {"c_N", num(s.c_N)},       {"a", s.a.str()},
              {"k", s.k.str()},    {"c_M", num(s.c_M)},      {"log_x_M", num(s.log_x_M)}, {"side_conditions", conds}};
}

Json to_json(const Table1& t) {
  Json rows = Json::array();
  for (const auto& r : t.rows) {
    Json j = to_json(r.result);
    j["target"] = Json{{"k", r.printed_k.str()}, {"c_M", r.printed_c_M}, {"log_x_M", r.printed_log_x_M}};
    j["met"] = Json{{"k", r.k_met}, {"c_M", r.c_met}, {"log_x_M", r.x_met}, {"all", r.met()}};
    rows.push_back(j);
  }
  return Json{{"rows", rows}, {"all_met", t.all_met}};
}

Json to_json(const MBounds& m) {
  return Json{{"c_2", num(m.c_2)},
              {"c_235", num(m.c_235)},
              {"log_x_M", num(m.log_x_M)},
              {"max_abs_M_small", num(m.max_abs_M_small)},
              {"pieces", named_values(m.pieces)}};
}

Json to_json(const SmallMBounds& m) {
  return Json{{"c_2", num(m.c_2)}, {"c_235", num(m.c_235)}, {"log_x0", num(m.log_x0)}, {"pieces", named_values(m.pieces)}};
}

Json to_json(const ExtremaRecord& e) {
  return Json{{"lo", e.lo},         {"hi", e.hi},           {"exponent", num(e.exponent)},
              {"normalizer", e.normalizer},                 {"arg_max", e.arg_max},
              {"max", num(e.max)},  {"arg_min", e.arg_min}, {"min", num(e.min)},
              {"arg_max_abs", e.arg_max_abs},               {"max_abs", num(e.max_abs)}};
}

Json to_json(const S3Estimate& s) {
  return Json{{"x_lo", s.x_lo},
              {"x_hi", s.x_hi},
              {"epsilon", num(s.epsilon)},
              {"main_max", num(s.main_max)},
              {"arg_max", s.arg_max},
              {"compute", num(s.budget.compute)},
              {"remainder", num(s.budget.remainder_132)},
              {"tail", num(s.budget.tail)},
              {"s3_center", num(s.s3_center)},
              {"s3_halfwidth", num(s.s3_halfwidth)}};
}

Json to_json(const RunManifest& m) {
  Json params = Json::object();
  for (const auto& [k, v] : m.parameters) params[k] = v;
  return Json{{"command", m.command},
              {"parameters", params},
              {"tool_version", m.tool_version},
              {"elapsed_seconds", num(m.elapsed_seconds)},
              {"outputs", m.outputs}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace omega
