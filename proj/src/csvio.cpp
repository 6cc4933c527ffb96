#include "sphlab/csvio.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace sphlab {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

int CsvTable::column(const std::string& name) const {
  for (size_t i = 0; i < header.size(); ++i)
    if (header[i] == name) return static_cast<int>(i);
  return -1;
}

void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("write_csv: cannot open " + path);
  for (size_t i = 0; i < header.size(); ++i) {
    if (i) out << ',';
    out << header[i];
  }
  out << '\n';
  for (const auto& row : rows) {
    for (size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      out << format_double(row[i]);
    }
    out << '\n';
  }
  if (!out) throw std::runtime_error("write_csv: write failed for " + path);
}

CsvTable read_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("read_csv: cannot open " + path);
  CsvTable table;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string cell;
    if (lineno == 1) {
      while (std::getline(ss, cell, ',')) table.header.push_back(cell);
      if (table.header.empty())
        throw std::runtime_error("read_csv: " + path + ": empty header row");
      continue;
    }
    std::vector<double> row;
    while (std::getline(ss, cell, ',')) {
      size_t pos = 0;
      double v;
      try {
        v = std::stod(cell, &pos);
      } catch (const std::exception&) {
        throw std::runtime_error("read_csv: " + path + ": row " + std::to_string(lineno) +
                                 ": not a number: '" + cell + "'");
      }
      if (pos != cell.size())
        throw std::runtime_error("read_csv: " + path + ": row " + std::to_string(lineno) +
                                 ": trailing characters in '" + cell + "'");
      row.push_back(v);
    }
    if (row.size() != table.header.size())
      throw std::runtime_error("read_csv: " + path + ": row " + std::to_string(lineno) +
                               ": expected " + std::to_string(table.header.size()) +
                               " columns, got " + std::to_string(row.size()));
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace sphlab
