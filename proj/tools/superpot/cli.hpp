#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace superpot {

/// Runs one command. args excludes the program name. Returns the exit code:
/// 0 on success, 1 on invalid input, 2 on an internal invariant breach.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace superpot
