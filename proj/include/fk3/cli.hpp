#pragma once

#include <string>
#include <vector>

namespace fk3 {

/// Runs one CLI invocation; args excludes the program name. Exit codes:
/// 0 success, 1 predicate failure, 2 cross-check violation, 3 usage error.
int run_command(const std::vector<std::string>& args);

}  // namespace fk3
