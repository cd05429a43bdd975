#include "fracdelay/csvio.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace fracdelay {

std::string csv_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.16e", v);
  return std::string(buf);
}

std::string csv_row(std::span<const double> values) {
  std::string row;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) row += ',';
    row += csv_number(values[i]);
  }
  return row;
}

void write_csv(const std::string& path, const std::string& header,
               const std::vector<std::string>& rows) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << header << '\n';
  for (const auto& r : rows) out << r << '\n';
  if (!out) throw std::runtime_error("failed writing output file: " + path);
}

}  // namespace fracdelay
