#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace isoverify::cli {

/// Runs the full command-line interface against explicit streams.
/// Returns the process exit code: 0 success, 2 input error,
/// 3 budget/undecided, 4 internal invariant violation.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace isoverify::cli
