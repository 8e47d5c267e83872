#include "fixedfield/serialize.hpp"

#include <stdexcept>

namespace fixedfield {

using nlohmann::json;

json field_to_json(const Field& field) {
  json j;
  j["p"] = field.p();
  j["n"] = field.n();
  if (field.n() > 1) j["modulus"] = field.modulus();
  return j;
}

FieldPtr field_from_json(const json& j) {
  std::optional<std::vector<std::uint64_t>> modulus;
  if (j.contains("modulus")) {
    modulus = j.at("modulus").get<std::vector<std::uint64_t>>();
  }
  return Field::make(j.at("p").get<std::uint64_t>(), j.at("n").get<std::uint32_t>(),
                     std::move(modulus));
}

json element_to_json(const FieldElement& e) { return json(e.digits()); }

FieldElement element_from_json(const FieldPtr& field, const json& j) {
  return field->element_from_digits(j.get<std::vector<std::uint64_t>>());
}

json polynomial_to_json(const Polynomial& p) {
  json j = json::array();
  for (const FieldElement& c : p.coefficients()) j.push_back(element_to_json(c));
  return j;
}

Polynomial polynomial_from_json(const FieldPtr& field, const json& j) {
  std::vector<FieldElement> coeffs;
  for (const auto& item : j) coeffs.push_back(element_from_json(field, item));
  return Polynomial(field, coeffs);
}

json rational_to_json(const RationalFunction& f) {
  return json{{"num", polynomial_to_json(f.num())}, {"den", polynomial_to_json(f.den())}};
}

RationalFunction rational_from_json(const FieldPtr& field, const json& j) {
  return RationalFunction(polynomial_from_json(field, j.at("num")),
                          polynomial_from_json(field, j.at("den")));
}

json moebius_to_json(const MoebiusMap& m) {
  return json{{"a", element_to_json(m.a())},
              {"b", element_to_json(m.b())},
              {"c", element_to_json(m.c())},
              {"d", element_to_json(m.d())}};
}

json report_to_json(const GeneratorReport& report) {
  json j;
  j["field"] = field_to_json(*report.field);
  j["method"] = method_name(report.method);
  j["m"] = report.m;
  j["group_order"] = report.group_order;
  j["generator"] = rational_to_json(report.generator);
  j["degree"] = report.degree;
  j["methods_compared"] = report.methods_compared;
  json verdicts = json::array();
  for (const Verdict& v : report_verdicts(report)) {
    verdicts.push_back({{"name", v.name}, {"pass", v.pass}, {"detail", v.detail}});
  }
  j["verdicts"] = verdicts;
  return j;
}

json check_results_to_json(const std::vector<CheckResult>& checks) {
  json out = json::array();
  for (const CheckResult& c : checks) {
    out.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  }
  return out;
}

}  // namespace fixedfield
