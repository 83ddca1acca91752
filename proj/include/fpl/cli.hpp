#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fpl::cli {

/// Runs one command. `args` excludes the program name.
/// Exit codes: 0 success, 2 invalid input or usage, 1 numeric or solver failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Directory used by paper-suite when --data is not given.
std::string default_data_dir();

}  // namespace fpl::cli
