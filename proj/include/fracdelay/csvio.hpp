#pragma once

#include <span>
#include <string>
#include <vector>

namespace fracdelay {

/// Number formatted with 17 significant digits ("%.16e"), enough to
/// round-trip a binary64 exactly; keeps CSV output byte-deterministic.
std::string csv_number(double v);

std::string csv_row(std::span<const double> values);

/// Writes header + rows to path; throws std::runtime_error on I/O failure.
void write_csv(const std::string& path, const std::string& header,
               const std::vector<std::string>& rows);

}  // namespace fracdelay
