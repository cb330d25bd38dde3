#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace pass::io {

/// Shortest text that round-trips at 17 significant digits.
std::string format_double(double value);

/// Provenance block written at the top of every CSV file. Each line starts
/// with '#'; the "generated_at" line is the only part that varies between
/// identical runs.
void write_provenance(std::ostream& out, std::string_view kind,
                      std::string_view config_json);

/// The file minus its '#' comment lines.
std::string data_section(std::string_view text);

/// Minimal reader for the numeric CSV files this library writes: comment
/// lines are skipped, the first remaining line is the header.
struct CsvTable {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  std::vector<double> numeric_column(std::string_view name) const;
};

CsvTable read_csv(std::istream& in);

}  // namespace pass::io
