#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace snb {

/// Exit codes: 0 success, 1 an asserted check failed, 2 input error.
/// `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace snb
