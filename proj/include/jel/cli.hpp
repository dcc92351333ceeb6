#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace jel {

// Runs the command line `args` (program name excluded). Returns the exit
// status: 0 success, 1 domain error, 2 usage error.
int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err);

}  // namespace jel
