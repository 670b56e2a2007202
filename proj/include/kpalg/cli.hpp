#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace kpalg {

/// Runs one command line (without the program name). Exit codes: 0 success,
/// 1 domain error, 2 parse error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kpalg
