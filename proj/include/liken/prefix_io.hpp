#pragma once

// Prefix export: CSV rows (index, value, approx, reps, irreducible) and a JSON
// document carrying the same rows plus the spec and generator list, which
// parses back into an equal Prefix.

#include <iosfwd>
#include <string>

#include "json.hpp"
#include "liken/enumerate.hpp"

namespace liken {

/// Decimal rendering rounded to `digits` places (display only).
std::string approx_decimal(const Value& v, unsigned digits = 12);

void write_prefix_csv(std::ostream& os, const Prefix& prefix);
nlohmann::json prefix_to_json(const Prefix& prefix);
/// Throws Parse on malformed input and the usual Prefix errors on invalid data.
Prefix prefix_from_json(const nlohmann::json& doc);

/// Field-exact equality: spec config, generators, values and representation sets.
bool same_prefix(const Prefix& a, const Prefix& b);

}  // namespace liken
