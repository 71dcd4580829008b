#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace archlc {

/// Runs the command line tool on args (program name excluded).
/// Returns 0 on success, 1 for usage and parse errors, 2 for mathematical failures.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace archlc
