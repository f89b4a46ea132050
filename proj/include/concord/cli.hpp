#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace concord::cli {

// Runs one CLI invocation. Exit codes: 0 success (or Distinguished),
// 1 Inconclusive / evaluator Unknown, 2 user error, 3 internal self-check
// failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace concord::cli
