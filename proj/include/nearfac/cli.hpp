#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nearfac::cli {

enum ExitCode : int { kOk = 0, kFalse = 1, kUsage = 2 };

// args excludes the program name. 0 success or true, 1 checked-false,
// 2 usage, domain or other error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nearfac::cli
