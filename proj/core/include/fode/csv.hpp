#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "fode/statespace.hpp"

namespace fode {

/// Shortest decimal text that parses back to exactly `v`.
std::string format_double(double v);

/// Strict parse of a whole token; throws InvalidArgument on junk or overflow.
double parse_double(std::string_view text);

/// Header `t,u,y,x1,x2`, LF line endings, one row per sample.
void write_csv(std::ostream& os, const SimulationResult& result);
void write_csv(const std::filesystem::path& path, const SimulationResult& result);

/// Inverse of write_csv. `step` is recovered from the t column (0 for a single row);
/// memory accounting is not part of the CSV. Throws IoError.
SimulationResult read_csv(std::istream& is);
SimulationResult read_csv(const std::filesystem::path& path);

}  // namespace fode
