#pragma once

#include <string>

#include <json.hpp>

#include "xyreg/certificate.hpp"
#include "xyreg/field.hpp"
#include "xyreg/order.hpp"
#include "xyreg/pattern.hpp"

namespace xyreg {

/// "rat" or "gf(p)".
Field parse_field_name(const std::string& name);

/// "paper", "grevlex" or "lex" over the 2n^2 variables of K[x_ij, y_ij].
OrderPtr order_from_name(const std::string& name, std::size_t n);

/// Certificate layout:
///
///   { "n", "order", "field",
///     "steps": [{ "kind", "label", "role", "element", "effective_lead",
///                 "subtractions": [[m, multiplier], ...], "m_next", "checks": {...},
///                 "strict_form" }],
///     "verdict": "certified" | "failed", "failed_step", "reason", "detail", "notes" }
///
/// Polynomials use the text grammar; failed_step is 1-based.
nlohmann::ordered_json certificate_to_json(const RegularityCertificate& cert);

/// Inverse of certificate_to_json. Stored checks are informational; use recheck() to validate.
RegularityCertificate certificate_from_json(const nlohmann::ordered_json& j);

nlohmann::ordered_json pattern_to_json(const PatternSpec& spec, const GenericProduct& product);

}  // namespace xyreg
