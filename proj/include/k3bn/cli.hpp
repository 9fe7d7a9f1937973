// include/k3bn/cli.hpp - the k3bn command-line front end, callable in-process.

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace k3bn::cli {

/// args excludes the program name. Returns the process exit code:
/// 0 success, 1 verification failure, 2 argument error (message and usage on err).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace k3bn::cli
