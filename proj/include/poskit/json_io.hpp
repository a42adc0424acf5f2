#pragma once

#include "poskit/blowup.hpp"
#include "poskit/bundle.hpp"
#include "poskit/cone.hpp"
#include "poskit/model.hpp"
#include "poskit/toric.hpp"
#include "poskit/validation.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace poskit {

// Stable field order everywhere; schemas reject unknown fields.
using Json = nlohmann::ordered_json;

/// Parse with malformed-input errors carrying the byte offset.
Json parse_json_text(const std::string& text);

Json rational_to_json(const Rat& x); // {"num": p, "den": q}, lowest terms, q > 0

VarietyModel model_from_json(const Json& j);
Json model_to_json(const VarietyModel& model);

Fan fan_from_json(const Json& j);
Json fan_to_json(const Fan& fan);

RationalCone cone_from_json(const Json& j);
Json cone_to_json(const RationalCone& cone);

SplittingData splitting_from_json(const Json& j);
Json splitting_to_json(const SplittingData& s);

Json report_to_json(const ValidationReport& report);
Json walls_to_json(const std::vector<Wall>& walls);

/// Rational vector from JSON entries that are integers or [num, den] pairs.
QVec rational_vector_from_json(const Json& j, const std::string& what);

} // namespace poskit
