#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qsc::cli {

// Dispatches one invocation. Returns the process exit status:
//   0  success
//   1  precondition failure (bad flags, invalid q, malformed scenario, ...)
//   2  internal verification mismatch (two routes that must agree did not)
// Reports go to `out`; structured error JSON goes to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace qsc::cli
