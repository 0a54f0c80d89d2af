#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qasym/io/number_format.hpp"
#include "qasym/sweep.hpp"

namespace qasym::io {

inline constexpr const char* kSweepCsvHeader = "model,param,gamma,asymmetry,backend";

inline void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
  os << kSweepCsvHeader << '\n';
  for (const auto& r : rows) {
    os << r.model << ',' << r.param << ',' << format_double(r.gamma) << ','
       << format_double(r.asymmetry) << ',' << r.backend << '\n';
  }
}

inline std::vector<SweepRow> read_sweep_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line != kSweepCsvHeader) {
    throw std::runtime_error("sweep csv: missing header");
  }
  std::vector<SweepRow> rows;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    for (std::string cell; std::getline(ss, cell, ',');) cells.push_back(cell);
    if (cells.size() != 5) throw std::runtime_error("sweep csv: bad row '" + line + "'");
    rows.push_back({cells[0], cells[1], parse_double(cells[2]), parse_double(cells[3]), cells[4]});
  }
  return rows;
}

}  // namespace qasym::io
