#include "pass/io/csv.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <istream>
#include <ostream>
#include <sstream>

#include "pass/errors.hpp"

namespace pass::io {

std::string format_double(double value) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value,
                                 std::chars_format::general, 17);
  if (ec != std::errc()) throw Error("cannot format double");
  return std::string(buf, end);
}

void write_provenance(std::ostream& out, std::string_view kind,
                      std::string_view config_json) {
  const auto now = std::chrono::time_point_cast<std::chrono::seconds>(
      std::chrono::system_clock::now());
  out << "# passim " << kind << '\n';
  out << "# generated_at: " << now.time_since_epoch().count()
      << " (unix seconds)\n";
  out << "# config: " << config_json << '\n';
}

std::string data_section(std::string_view text) {
  std::string out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(pos, end - pos);
    if (!line.starts_with('#')) {
      out.append(line);
      out.push_back('\n');
    }
    pos = end + 1;
  }
  return out;
}

namespace {

std::vector<std::string> split_row(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

}  // namespace

CsvTable read_csv(std::istream& in) {
  CsvTable table;
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.starts_with('#')) continue;
    if (header) {
      table.columns = split_row(line);
      header = false;
    } else {
      table.rows.push_back(split_row(line));
    }
  }
  return table;
}

std::vector<double> CsvTable::numeric_column(std::string_view name) const {
  const auto it = std::find(columns.begin(), columns.end(), name);
  if (it == columns.end()) {
    throw ConfigError("CSV has no column '" + std::string(name) + "'");
  }
  const auto idx = static_cast<std::size_t>(it - columns.begin());
  std::vector<double> out;
  out.reserve(rows.size());
  for (const auto& row : rows) {
    if (idx >= row.size()) throw ConfigError("short CSV row");
    double v = 0.0;
    const std::string& s = row[idx];
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
      throw ConfigError("non-numeric CSV cell '" + s + "'");
    }
    out.push_back(v);
  }
  return out;
}

}  // namespace pass::io
