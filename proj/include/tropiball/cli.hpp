#pragma once

// Command-line surface. run_cli is the whole program minus main() so the
// test suite can drive commands in-process and capture their streams.
//
// Exit codes: 0 success, 1 domain error, 2 usage error. Domain and usage
// errors print a machine-readable JSON object on the error stream.

#include <ostream>
#include <string>
#include <vector>

namespace tropiball {

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace tropiball
