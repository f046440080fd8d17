#ifndef WRONSK_CSV_HPP
#define WRONSK_CSV_HPP

#include <cstdio>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "wronsk/errors.hpp"

namespace wronsk {

/// Format a double with 17 significant digits (round-trips exactly).
inline std::string csv_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

inline double csv_parse_number(const std::string& cell) {
  char* end = nullptr;
  const double v = std::strtod(cell.c_str(), &end);
  if (end == cell.c_str()) throw Error("csv: malformed numeric cell '" + cell + "'");
  return v;
}

/// Flat table with '#'-prefixed comment lines before the header (metadata)
/// and after the data (footer). Output is deterministic: no timestamps,
/// LF line endings, '.' decimal separator, ',' cell separator.
struct CsvTable {
  std::vector<std::string> metadata;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> footer;
};

inline void write_csv(std::ostream& os, const CsvTable& table,
                      bool with_metadata = true) {
  if (with_metadata)
    for (const auto& line : table.metadata) os << "# " << line << "\n";
  for (std::size_t j = 0; j < table.columns.size(); ++j)
    os << (j ? "," : "") << table.columns[j];
  os << "\n";
  for (const auto& row : table.rows) {
    for (std::size_t j = 0; j < row.size(); ++j) os << (j ? "," : "") << row[j];
    os << "\n";
  }
  if (with_metadata)
    for (const auto& line : table.footer) os << "# " << line << "\n";
}

/// Parse a file produced by write_csv.
inline CsvTable read_csv(std::istream& is) {
  CsvTable table;
  std::string line;
  bool header_seen = false;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::string text = line.substr(line.size() > 1 && line[1] == ' ' ? 2 : 1);
      (header_seen ? table.footer : table.metadata).push_back(text);
      continue;
    }
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (!header_seen) {
      table.columns = cells;
      header_seen = true;
    } else {
      table.rows.push_back(std::move(cells));
    }
  }
  if (!header_seen) throw Error("csv: missing header row");
  return table;
}

}  // namespace wronsk

#endif
