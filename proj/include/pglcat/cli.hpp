#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pglcat {

/// Command dispatch; returns the process exit code:
/// 0 success, 2 usage error, 3 domain error, 4 data-file error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pglcat
