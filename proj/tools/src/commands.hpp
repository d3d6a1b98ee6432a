#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cyclic::cli {

/// Dispatches one CLI invocation. Returns the process exit status:
/// 0 success, 1 validation failure, 2 parse/usage error.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

} // namespace cyclic::cli
