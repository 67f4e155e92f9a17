#pragma once

#include <filesystem>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "copent/matrix.hpp"

namespace copent {

/// Numeric CSV, one observation per row. A first line containing any
/// non-numeric field is treated as a header and skipped. Blank lines are
/// ignored; ragged rows and non-finite values raise InvalidInputError.
DataMatrix parse_data_csv(std::istream& in);
DataMatrix read_data_csv(const std::filesystem::path& path);

/// Shortest round-trippable decimal form ("%.17g").
std::string format_double(double value);

std::vector<std::string> split_csv_line(std::string_view line);

/// Strict numeric parse of a whole field (surrounding spaces allowed).
std::optional<double> parse_double(std::string_view field);

}  // namespace copent
