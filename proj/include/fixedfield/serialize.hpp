#ifndef FIXEDFIELD_SERIALIZE_HPP
#define FIXEDFIELD_SERIALIZE_HPP

#include <json.hpp>

#include "fixedfield/fixed_field.hpp"
#include "fixedfield/verify.hpp"

namespace fixedfield {

// Field: {"p": 2, "n": 2, "modulus": [1,1,1]}; modulus omitted when n == 1.
// FieldElement: digit array ascending, length n.
// Polynomial: array of element digit arrays, ascending powers.
// RationalFunction: {"num": [...], "den": [...]}.
// MoebiusMap: {"a": [...], "b": [...], "c": [...], "d": [...]}.

nlohmann::json field_to_json(const Field& field);
FieldPtr field_from_json(const nlohmann::json& j);

nlohmann::json element_to_json(const FieldElement& e);
FieldElement element_from_json(const FieldPtr& field, const nlohmann::json& j);

nlohmann::json polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(const FieldPtr& field, const nlohmann::json& j);

nlohmann::json rational_to_json(const RationalFunction& f);
RationalFunction rational_from_json(const FieldPtr& field, const nlohmann::json& j);

nlohmann::json moebius_to_json(const MoebiusMap& m);

nlohmann::json report_to_json(const GeneratorReport& report);

nlohmann::json check_results_to_json(const std::vector<CheckResult>& checks);

}  // namespace fixedfield

#endif
