#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace apgate::cli {

/// Runs the command line. Writes results to `out` unless --out is given and
/// diagnostics to `err`. Returns 0, 2 (config error) or 3 (numerical failure).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace apgate::cli
