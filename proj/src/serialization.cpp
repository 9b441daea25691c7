#include "genfermat/serialization.hpp"

namespace genfermat {

using nlohmann::json;

json field_to_json(const Field& F) {
  return json{{"p", F.p()}, {"h", F.h()}, {"modulus", F.modulus()}};
}

Field field_from_json(const json& j) {
  if (!j.is_object() || !j.contains("p") || !j.contains("h"))
    fail(Errc::ParseError, "field JSON needs p and h");
  std::uint64_t p = j.at("p").get<std::uint64_t>();
  unsigned h = j.at("h").get<unsigned>();
  std::optional<std::vector<std::uint32_t>> mod;
  if (j.contains("modulus") && !j.at("modulus").is_null())
    mod = j.at("modulus").get<std::vector<std::uint32_t>>();
  return Field::make(p, h, mod);
}

json curve_to_json(const CurveSpec& spec) {
  json j{{"family", spec.family == Family::TwoTerm ? "two_term" : "three_term"},
         {"field", field_to_json(spec.field)},
         {"n", spec.n},
         {"m", spec.m},
         {"a", spec.a},
         {"b", spec.b}};
  if (spec.family == Family::ThreeTerm)
    j["c"] = spec.c;
  else
    j["c"] = nullptr;
  return j;
}

CurveSpec curve_from_json(const json& j) {
  if (!j.is_object()) fail(Errc::ParseError, "curve JSON must be an object");
  for (const char* key : {"family", "field", "n", "m", "a", "b"})
    if (!j.contains(key)) fail(Errc::ParseError, std::string("curve JSON needs ") + key);
  CurveSpec spec;
  std::string fam = j.at("family").get<std::string>();
  if (fam == "two_term")
    spec.family = Family::TwoTerm;
  else if (fam == "three_term")
    spec.family = Family::ThreeTerm;
  else
    fail(Errc::ParseError, "family must be two_term or three_term");
  spec.field = field_from_json(j.at("field"));
  spec.n = j.at("n").get<std::uint32_t>();
  spec.m = j.at("m").get<std::uint32_t>();
  auto elem = [&](const json& v, const char* name) -> Fel {
    std::uint64_t raw = v.get<std::uint64_t>();
    if (raw >= spec.field.q()) fail(Errc::ParseError, std::string(name) + " not in [0, q)");
    return static_cast<Fel>(raw);
  };
  spec.a = elem(j.at("a"), "a");
  spec.b = elem(j.at("b"), "b");
  if (spec.family == Family::ThreeTerm) {
    if (!j.contains("c") || j.at("c").is_null()) fail(Errc::ParseError, "three_term needs c");
    spec.c = elem(j.at("c"), "c");
  }
  if (j.contains("degree_cap") && !j.at("degree_cap").is_null())
    spec.degree_cap = j.at("degree_cap").get<std::uint32_t>();
  return validate(spec);
}

json record_to_json(const ClassificationRecord& rec) {
  json j{{"system", system_name(rec.system)},
         {"geometric", verdict_name(rec.geometric)},
         {"frobenius", verdict_name(rec.frobenius)},
         {"case_label", case_label_name(rec.case_label)},
         {"method", rec.method == Method::Theorem
                        ? "theorem"
                        : (rec.method == Method::Determinant ? "determinant" : "both")}};
  if (rec.r)
    j["r"] = *rec.r;
  else
    j["r"] = nullptr;
  return j;
}

json count_report_to_json(const CountReport& rep) {
  json j{{"affine", rep.affine},
         {"infinity_branches", rep.infinity_branches},
         {"total", rep.total},
         {"method", count_method_name(rep.method)}};
  if (rep.formula_case)
    j["formula_case"] = *rep.formula_case;
  else
    j["formula_case"] = nullptr;
  if (!rep.note.empty()) j["note"] = rep.note;
  return j;
}

json bound_report_to_json(const BoundReport& rep) {
  json j{{"genus", rep.genus},
         {"alpha", rep.alpha},
         {"beta", rep.beta},
         {"sv_bound", rep.sv_bound},
         {"hasse_weil_upper", rep.hasse_weil_upper},
         {"frobenius_nonclassical", rep.frobenius_nonclassical}};
  if (rep.generic_sv)
    j["generic_sv"] = *rep.generic_sv;
  else
    j["generic_sv"] = nullptr;
  return j;
}

}  // namespace genfermat
