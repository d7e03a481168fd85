#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace wfc::cli {

// Parses and runs one invocation; `args` excludes the program name.
// Exit status: 0 success, 2 usage error, 1 runtime error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wfc::cli
