#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fcl {

// Runs one CLI invocation; returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace fcl
