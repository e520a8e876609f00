#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace pgc::cli {

enum ExitCode : int { kOk = 0, kMismatch = 1, kInvalidInput = 2, kBudget = 3 };

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pgc::cli
