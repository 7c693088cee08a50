#include "bargmann/report.hpp"

#include <sstream>
#include <stdexcept>

#include "bargmann/json_writer.hpp"

namespace bargmann {

nlohmann::json report_to_json(const ExpansionReport& report) {
  nlohmann::json j;
  j["check"] = report.check;
  j["k"] = report.k;
  j["n"] = report.n;
  j["N"] = report.diagnostics.N;
  j["Q"] = report.diagnostics.Q;
  j["t"] = report.t;
  j["remainder"] = report.remainder;
  j["slope"] = report.slope ? nlohmann::json(*report.slope) : nlohmann::json("exact-zero");
  j["verdict"] = to_string(report.verdict);

  const Diagnostics& d = report.diagnostics;
  nlohmann::json diag;
  diag["N"] = d.N;
  diag["Q"] = d.Q;
  diag["margin"] = d.margin;
  diag["window"] = d.window ? nlohmann::json(*d.window) : nlohmann::json(nullptr);
  diag["half_basis_agreement"] = d.half_basis_agreement ? nlohmann::json(*d.half_basis_agreement) : nlohmann::json(nullptr);
  diag["half_basis_relative_difference"] =
      d.half_basis_relative_difference ? nlohmann::json(*d.half_basis_relative_difference) : nlohmann::json(nullptr);
  diag["threshold"] = d.threshold;
  diag["mode"] = d.mode;
  diag["note"] = d.note;
  j["diagnostics"] = diag;
  return j;
}

ExpansionReport report_from_json(const nlohmann::json& j) {
  ExpansionReport r;
  r.check = j.at("check").get<std::string>();
  r.k = j.at("k").get<int>();
  r.n = j.at("n").get<std::size_t>();
  r.t = j.at("t").get<std::vector<double>>();
  r.remainder = j.at("remainder").get<std::vector<double>>();
  const auto& slope = j.at("slope");
  if (slope.is_string()) {
    if (slope.get<std::string>() != "exact-zero") throw std::invalid_argument("report: unknown slope marker");
  } else {
    r.slope = slope.get<double>();
  }
  r.verdict = verdict_from_string(j.at("verdict").get<std::string>());

  const auto& diag = j.at("diagnostics");
  Diagnostics& d = r.diagnostics;
  d.N = diag.at("N").get<int>();
  d.Q = diag.at("Q").get<int>();
  d.margin = diag.at("margin").get<int>();
  if (!diag.at("window").is_null()) d.window = diag.at("window").get<int>();
  if (!diag.at("half_basis_agreement").is_null()) d.half_basis_agreement = diag.at("half_basis_agreement").get<bool>();
  if (!diag.at("half_basis_relative_difference").is_null()) {
    d.half_basis_relative_difference = diag.at("half_basis_relative_difference").get<double>();
  }
  d.threshold = diag.at("threshold").get<double>();
  d.mode = diag.at("mode").get<std::string>();
  d.note = diag.at("note").get<std::string>();
  return r;
}

std::string report_json_text(const ExpansionReport& report) { return dump_json(report_to_json(report)) + "\n"; }

ExpansionReport parse_report_json(const std::string& text) { return report_from_json(nlohmann::json::parse(text)); }

std::string report_csv(const ExpansionReport& report) {
  std::string out = "t,remainder\n";
  for (std::size_t i = 0; i < report.t.size(); ++i) {
    out += format_double(report.t[i]) + "," + format_double(report.remainder[i]) + "\n";
  }
  return out;
}

std::vector<std::pair<double, double>> parse_report_csv(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  if (!std::getline(is, line) || line != "t,remainder") throw std::invalid_argument("report csv: missing header");
  std::vector<std::pair<double, double>> rows;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("report csv: malformed line '" + line + "'");
    rows.emplace_back(std::stod(line.substr(0, comma)), std::stod(line.substr(comma + 1)));
  }
  return rows;
}

}  // namespace bargmann
