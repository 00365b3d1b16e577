#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mbs::cli {

/// Runs one command. `args` excludes the program name. Returns the exit status:
/// 0 success, 1 a mathematical "no", 2 an error.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace mbs::cli
