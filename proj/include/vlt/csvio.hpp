#pragma once

#include <string>
#include <vector>

namespace vlt {

/// Shortest decimal string that parses back to exactly the same double.
std::string to_string_shortest(double v);

/// Writes a header line followed by one line per row; numeric cells use
/// to_string_shortest.
void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows);

}  // namespace vlt
