#pragma once

#include <string>

#include <json.hpp>

#include "ballpark/types.hpp"

namespace ballpark {

// CSV point reader: one point per row, comma-separated reals, uniform
// column count; lines starting with '#' are comments. Throws ParseError
// with a 1-based row/column location.
PointSet parse_points_text(const std::string& text);
PointSet parse_points_file(const std::string& path);

// JSON serialization with every floating-point number printed at 17
// significant digits, so a reparse reproduces the doubles bit-exactly.
std::string dump_json(const nlohmann::json& value);

}  // namespace ballpark
