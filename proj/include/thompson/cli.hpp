#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace thompson::cli {

// args excludes the program name. Returns the process exit status:
// 0 success / PASS, 1 FAIL or computation error, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace thompson::cli
