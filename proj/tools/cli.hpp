// Command-line front end: check, build and search.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace admp {

// Exit codes: 0 holds or built, 1 a predicate fails, 2 input or usage error,
// 3 internal error. `args` excludes the program name.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace admp
