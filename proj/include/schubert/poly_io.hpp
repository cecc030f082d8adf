// Printers and the JSON wire format.  All three renderings emit terms in the
// canonical order, so equal polynomials produce identical bytes.

#pragma once

#include "schubert/poly.hpp"

#include <json.hpp>

#include <string>

namespace schubert {

// "x1^2 + 2*x1*t1 - t2^2", zero prints "0", Laurent exponents as "E1^-1"
std::string to_text(const Polynomial& p);

// "x_1^{2} + 2 x_1 t_1 - t_2^{2}"; E_i renders as e^{t_i}
std::string to_latex(const Polynomial& p);

// [{"coeff":"<decimal>","vars":[{"exp":..,"family":"x|t|T|E","index":..},..]},..]
nlohmann::json poly_json(const Polynomial& p);

// inverse of poly_json; validates families, indices and exponents
Polynomial poly_from_json(const nlohmann::json& j);

}  // namespace schubert
