#pragma once

// JSON adapters for the wire formats: fields as {"p","h","modulus"} with the
// modulus low-degree-first and monic last, elements integer-encoded relative
// to the modulus, curves as {"family","field","n","m","a","b","c"}.

#include <json.hpp>

#include "genfermat/classifier.hpp"
#include "genfermat/counting.hpp"
#include "genfermat/curve.hpp"

namespace genfermat {

nlohmann::json field_to_json(const Field& F);
Field field_from_json(const nlohmann::json& j);

nlohmann::json curve_to_json(const CurveSpec& spec);
/// Parses and validates; throws ParseError on malformed input and the
/// validation errors otherwise.
CurveSpec curve_from_json(const nlohmann::json& j);

nlohmann::json record_to_json(const ClassificationRecord& rec);
nlohmann::json count_report_to_json(const CountReport& rep);
nlohmann::json bound_report_to_json(const BoundReport& rep);

}  // namespace genfermat
