#pragma once

#include <string>

#include <json.hpp>

#include "quadfact/bounds.hpp"
#include "quadfact/expoly.hpp"
#include "quadfact/measure.hpp"
#include "quadfact/verify.hpp"

namespace quadfact {

using json = nlohmann::json;

/// {"a":..., "b":..., "atoms":[{"x":..., "w":...}], "density":...}
json measure_to_json(const Measure& mu);
/// Validates through the Measure constructor; malformed documents raise
/// std::invalid_argument.
Measure measure_from_json(const json& j);

/// [{"re_lambda":..., "im_lambda":..., "j":..., "re_c":..., "im_c":...}]
json expoly_to_json(const ExpPolynomial& p);
ExpPolynomial expoly_from_json(const json& j);

json bound_report_to_json(const BoundReport& r);
json verification_to_json(const VerificationRecord& r);
/// One compact JSON object, no trailing newline.
std::string to_json_line(const VerificationRecord& r);

}  // namespace quadfact
