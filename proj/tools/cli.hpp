#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace thompson::cli {

// Runs one subcommand. JSON results go to `out`, diagnostics and
// machine-readable error objects to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace thompson::cli
