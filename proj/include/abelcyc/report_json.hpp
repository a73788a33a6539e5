#pragma once

#include <json.hpp>

#include "abelcyc/avoidance.hpp"

namespace abelcyc {

inline constexpr int report_schema_version = 1;

// {"word", "mode", "kind", "exponent": "N" | "p/q" [+], "verdict",
//  "witness": {"start", "period", "exponent": "p/q"} | null}
nlohmann::json to_json(const AvoidanceReport& report);
nlohmann::json to_json(const PowerOccurrence& occ);

/// Structural validation of a report object against the field names and
/// types above. Returns an empty string when valid, otherwise a reason.
std::string validate_report_json(const nlohmann::json& j);

}  // namespace abelcyc
