#include "dfsion/cli/report.hpp"

#include <cmath>

#include <fmt/format.h>
#include <json.hpp>

namespace dfsion::cli {

namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string cell_text(const Cell& cell) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          return "NA";
        } else if constexpr (std::is_same_v<T, double>) {
          return format_real(v);
        } else if constexpr (std::is_same_v<T, std::int64_t>) {
          return std::to_string(v);
        } else {
          return csv_escape(v);
        }
      },
      cell);
}

nlohmann::ordered_json cell_json(const Cell& cell) {
  return std::visit(
      [](const auto& v) -> nlohmann::ordered_json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          return nullptr;
        } else if constexpr (std::is_same_v<T, double>) {
          if (!std::isfinite(v)) return nullptr;
          return v;
        } else {
          return v;
        }
      },
      cell);
}

}  // namespace

std::string format_real(double v) {
  if (!std::isfinite(v)) return "NA";
  return fmt::format("{:.15g}", v);
}

void write_csv(const Report& report, std::ostream& out) {
  out << "# command: " << report.command << '\n';
  out << "# schema_version: " << kSchemaVersion << '\n';
  for (const auto& [k, v] : report.config) out << "# config." << k << ": " << v << '\n';
  for (const auto& [k, v] : report.summary) out << "# summary." << k << ": " << v << '\n';
  for (std::size_t i = 0; i < report.columns.size(); ++i) out << (i ? "," : "") << report.columns[i];
  out << '\n';
  for (const auto& row : report.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << cell_text(row[i]);
    out << '\n';
  }
}

void write_json(const Report& report, std::ostream& out) {
  nlohmann::ordered_json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["command"] = report.command;
  auto& config = doc["config"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : report.config) config[k] = v;
  auto& summary = doc["summary"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : report.summary) summary[k] = v;
  auto& rows = doc["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : report.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size() && i < report.columns.size(); ++i) obj[report.columns[i]] = cell_json(row[i]);
    rows.push_back(std::move(obj));
  }
  out << doc.dump(2) << '\n';
}

}  // namespace dfsion::cli
