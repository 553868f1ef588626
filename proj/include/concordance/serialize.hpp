#pragma once

#include <string>

#include "concordance/pl_function.hpp"
#include "concordance/staircase.hpp"
#include "json.hpp"

namespace concordance {

// {"breakpoints": ["0", "1", "2"], "values": ["0", "-1", "0"]}; every number
// is an exact "num/den" (or integer) string.
nlohmann::json to_json(const PLFunction& f);
// Throws std::invalid_argument on malformed input or a non-canonical domain.
PLFunction pl_function_from_json(const nlohmann::json& doc);

// "t,value" header followed by one row per breakpoint.
std::string to_csv(const PLFunction& f);

// An 800x400 polyline plot over t in [0,2], with the t axis drawn at value 0.
std::string to_svg(const PLFunction& f, const std::string& title);

// Staircase, a-tuple, genus and Alexander exponents of T(p,q).
nlohmann::json staircase_report(const TorusKnot& knot);

}  // namespace concordance
