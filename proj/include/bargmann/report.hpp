#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "bargmann/harness.hpp"

namespace bargmann {

/// {check, k, n, N, Q, t, remainder, slope, verdict, diagnostics}; slope is the string
/// "exact-zero" when no fit was made.
nlohmann::json report_to_json(const ExpansionReport& report);
ExpansionReport report_from_json(const nlohmann::json& j);

/// Canonical text form (17 significant digits), and its inverse.
std::string report_json_text(const ExpansionReport& report);
ExpansionReport parse_report_json(const std::string& text);

/// Lossy two-column view "t,remainder".
std::string report_csv(const ExpansionReport& report);
std::vector<std::pair<double, double>> parse_report_csv(const std::string& text);

}  // namespace bargmann
