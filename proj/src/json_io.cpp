#include "cld/json_io.hpp"

#include "cld/errors.hpp"

namespace cld {

namespace {

Rational rational_from_json(const json& j, const char* where) {
  if (!j.is_string())
    throw Error(std::string(where) + ": expected a rational string like \"1/4\"");
  return Rational::parse(j.get<std::string>());
}

} // namespace

json to_json(const Proposition& p) {
  json probs = json::array();
  for (int i = 0; i < p.size(); ++i) probs.push_back(p[i].str());
  return json{{"probs", std::move(probs)}};
}

Proposition proposition_from_json(const json& j) {
  if (!j.is_object() || !j.contains("probs") || !j["probs"].is_array())
    throw Error("proposition_from_json: expected {\"probs\": [...]}");
  std::vector<Rational> probs;
  probs.reserve(j["probs"].size());
  for (const auto& e : j["probs"]) probs.push_back(rational_from_json(e, "probs"));
  return Proposition(std::move(probs));
}

json to_json(const AdmissibleMatrix& g, bool include_dense) {
  json out{{"rows", g.rows()}, {"col_map", g.col_map()}};
  if (include_dense) out["dense"] = g.dense();
  return out;
}

AdmissibleMatrix admissible_from_json(const json& j) {
  if (!j.is_object() || !j.contains("rows") || !j.contains("col_map"))
    throw Error("admissible_from_json: expected {\"rows\": M, \"col_map\": [...]}");
  return AdmissibleMatrix(j["rows"].get<int>(),
                          j["col_map"].get<std::vector<int>>());
}

json to_json(const PqcForm& f) {
  return json{{"p", f.p.str()}, {"q", f.q.str()}, {"C", f.C.str()}};
}

PqcForm pqc_from_json(const json& j) {
  if (!j.is_object() || !j.contains("p") || !j.contains("q") || !j.contains("C"))
    throw Error("pqc_from_json: expected {\"p\": .., \"q\": .., \"C\": ..}");
  return PqcForm{rational_from_json(j["p"], "p"), rational_from_json(j["q"], "q"),
                 rational_from_json(j["C"], "C")};
}

json to_json(const ConnectiveSpec& spec) {
  json out = to_json(spec.selector);
  out["input_dims"] = spec.input_dims;
  return out;
}

ConnectiveSpec connective_from_json(const json& j) {
  if (!j.is_object() || !j.contains("input_dims"))
    throw Error("connective_from_json: expected a selector with \"input_dims\"");
  return ConnectiveSpec(j["input_dims"].get<std::vector<int>>(),
                        admissible_from_json(j));
}

} // namespace cld
