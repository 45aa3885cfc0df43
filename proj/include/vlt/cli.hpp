#pragma once

#include <string>
#include <vector>

namespace vlt {

/// Batch command line front end.  Returns the process exit code:
/// 0 success, 1 usage errors, 2 data or numerical errors.
int run_cli(int argc, const char* const* argv);

/// Convenience overload for in-process invocation; args excludes argv[0].
int run_cli(const std::vector<std::string>& args);

}  // namespace vlt
