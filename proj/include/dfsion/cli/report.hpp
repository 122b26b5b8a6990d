#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace dfsion::cli {

inline constexpr int kSchemaVersion = 1;

// Empty cells (std::monostate) print as "NA" in CSV and null in JSON.
using Cell = std::variant<std::monostate, double, std::int64_t, std::string>;

struct Report {
  std::string command;
  std::vector<std::pair<std::string, std::string>> config;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  std::vector<std::pair<std::string, std::string>> summary;

  void add_summary(std::string key, std::string value) { summary.emplace_back(std::move(key), std::move(value)); }
};

// CSV layout: '#'-prefixed preamble (command, schema_version, config.*,
// summary.*), then the header row, then data rows. LF line endings; reals
// printed with 15 significant digits.
void write_csv(const Report& report, std::ostream& out);

// {"schema_version", "command", "config", "summary", "rows"}; rows are
// objects keyed by column name.
void write_json(const Report& report, std::ostream& out);

std::string format_real(double v);

}  // namespace dfsion::cli
