#pragma once

#include <json.hpp>

#include "poincare/polynomial.hpp"
#include "poincare/power_series.hpp"

namespace poincare {

// JSON documents:
//   series:   {"field":"Q"|"Q(q)","precision":N,"coeffs":["c0",...,"cN"]}
//   poly:     {"field":...,"degree":d,"coeffs":["c0",...,"cd"]}
//   Laurent:  {"field":...,"low":l,"degree":h,"coeffs":["c_l",...,"c_h"]}
// Coefficients are exact strings as produced by FieldElement::to_string.
// Malformed documents raise ParseError.

nlohmann::ordered_json to_json(const PowerSeries& f);
nlohmann::ordered_json to_json(const Polynomial& p);
nlohmann::ordered_json to_json(const LaurentPolynomial& p);

PowerSeries series_from_json(const nlohmann::ordered_json& doc);
Polynomial polynomial_from_json(const nlohmann::ordered_json& doc);
LaurentPolynomial laurent_from_json(const nlohmann::ordered_json& doc);

}  // namespace poincare
