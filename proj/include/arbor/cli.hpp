#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace arbor::cli {

/// Runs one CLI command. Returns the process exit code: 0 on success,
/// 1 when a verification suite reports failures, 2 on usage/input/library
/// errors. All regular output goes to `out`, diagnostics to `err`.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace arbor::cli
