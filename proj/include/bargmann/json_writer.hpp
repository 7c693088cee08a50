#pragma once

#include <string>

#include <json.hpp>

namespace bargmann {

/// Serializes a JSON value with every floating-point number printed with 17
/// significant digits (%.17g). Non-finite doubles become null. Object keys keep
/// nlohmann's sorted order, so identical values give byte-identical text.
std::string dump_json(const nlohmann::json& value, int indent = 2);

/// Formats one double as %.17g.
std::string format_double(double x);

}  // namespace bargmann
