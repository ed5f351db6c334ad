#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace binform::cli {

// Runs one CLI invocation (args exclude the program name) writing to the
// given streams. Returns the process exit code:
//   0  success
//   1  verification found mismatches
//   2  invalid arguments or I/O failure
//   3  a cache file failed re-verification and was quarantined
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace binform::cli
