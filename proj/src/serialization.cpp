#include "poincare/serialization.hpp"

#include "poincare/error.hpp"

namespace poincare {
namespace {

using json = nlohmann::ordered_json;

json coeff_array(const std::vector<FieldElement>& coeffs) {
  json out = json::array();
  for (const auto& c : coeffs) out.push_back(c.to_string());
  return out;
}

const json& member(const json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) {
    throw Error(ErrorCode::ParseError, std::string("JSON document lacks \"") + key + "\"");
  }
  return doc.at(key);
}

int int_member(const json& doc, const char* key) {
  const json& v = member(doc, key);
  if (!v.is_number_integer()) throw Error(ErrorCode::ParseError, std::string("\"") + key + "\" must be an integer");
  return v.get<int>();
}

Field field_member(const json& doc) {
  const json& v = member(doc, "field");
  if (!v.is_string()) throw Error(ErrorCode::ParseError, "\"field\" must be a string");
  return parse_field(v.get<std::string>());
}

std::vector<FieldElement> coeffs_member(const json& doc, Field field, std::size_t expected) {
  const json& v = member(doc, "coeffs");
  if (!v.is_array()) throw Error(ErrorCode::ParseError, "\"coeffs\" must be an array");
  if (v.size() != expected) {
    throw Error(ErrorCode::ParseError, "expected " + std::to_string(expected) + " coefficients, got " +
                                           std::to_string(v.size()));
  }
  std::vector<FieldElement> out;
  out.reserve(v.size());
  for (const auto& c : v) {
    if (!c.is_string()) throw Error(ErrorCode::ParseError, "coefficients must be strings");
    out.push_back(FieldElement::parse(field, c.get<std::string>()));
  }
  return out;
}

}  // namespace

json to_json(const PowerSeries& f) {
  return json{{"field", std::string(to_string(f.field()))},
              {"precision", f.precision()},
              {"coeffs", coeff_array(f.coeffs())}};
}

json to_json(const Polynomial& p) {
  return json{{"field", std::string(to_string(p.field()))}, {"degree", p.degree()}, {"coeffs", coeff_array(p.coeffs())}};
}

json to_json(const LaurentPolynomial& p) {
  return json{{"field", std::string(to_string(p.field()))},
              {"low", p.low()},
              {"degree", p.is_zero() ? -1 : p.high()},
              {"coeffs", coeff_array(p.coeffs())}};
}

PowerSeries series_from_json(const json& doc) {
  const Field field = field_member(doc);
  const int n = int_member(doc, "precision");
  if (n < 0) throw Error(ErrorCode::ParseError, "negative precision");
  return {field, coeffs_member(doc, field, static_cast<std::size_t>(n) + 1)};
}

Polynomial polynomial_from_json(const json& doc) {
  const Field field = field_member(doc);
  const int d = int_member(doc, "degree");
  if (d < -1) throw Error(ErrorCode::ParseError, "degree must be >= -1");
  Polynomial p(field, coeffs_member(doc, field, static_cast<std::size_t>(d + 1)));
  if (p.degree() != d) throw Error(ErrorCode::ParseError, "leading coefficient is zero");
  return p;
}

LaurentPolynomial laurent_from_json(const json& doc) {
  const Field field = field_member(doc);
  const int low = int_member(doc, "low");
  const int high = int_member(doc, "degree");
  if (high < low - 1) throw Error(ErrorCode::ParseError, "degree below low");
  const auto count = static_cast<std::size_t>(high - low + 1);
  LaurentPolynomial p(field, low, coeffs_member(doc, field, count));
  if (count != 0 && (p.low() != low || p.high() != high)) {
    throw Error(ErrorCode::ParseError, "Laurent end coefficients must be nonzero");
  }
  return p;
}

}  // namespace poincare
