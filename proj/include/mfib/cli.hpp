#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mfib::cli {

// Runs one subcommand. Exit codes: 0 success (and all checks passed for the
// verification subcommands), 1 any failed check, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mfib::cli
