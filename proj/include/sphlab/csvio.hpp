#pragma once

#include <string>
#include <vector>

namespace sphlab {

//! Shortest 17-significant-digit representation; round-trips bit-exactly.
std::string format_double(double v);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;

  int column(const std::string& name) const;  // -1 if absent
};

void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows);

//! Strict reader: numeric cells only, equal row lengths; errors carry the
//! offending 1-based row number.
CsvTable read_csv(const std::string& path);

}  // namespace sphlab
