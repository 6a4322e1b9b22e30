#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pw {

/// Shortest decimal representation that round-trips to the same double;
/// keeps CSV output byte-stable across runs.
std::string format_double(double value);

/// Write one CSV row of already formatted cells.
void write_csv_row(std::ostream& os, const std::vector<std::string>& cells);

/// Convenience: format a numeric row.
void write_csv_row(std::ostream& os, const std::vector<double>& cells);

}  // namespace pw
