#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace rectree::cli {

/// Exit codes: 0 success, 1 failed check or computation error, 2 usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Convenience overload; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rectree::cli
