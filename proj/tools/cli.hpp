#pragma once

#include <string>
#include <vector>

namespace rnnids::cli {

// Runs one command line (args exclude the program name). Returns the
// process exit code: 0 success, 1 operation error, 2 usage error.
int cli_dispatch(const std::vector<std::string>& args);

}  // namespace rnnids::cli
