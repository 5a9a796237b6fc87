#pragma once

#include <string>
#include <vector>

namespace pglcat {

/// CSV field split with double-quote support ("" escapes a quote).
std::vector<std::string> parse_csv_line(const std::string& line);

/// Splits on a separator, dropping empty parts.
std::vector<std::string> split_nonempty(const std::string& s, char sep);

}  // namespace pglcat
