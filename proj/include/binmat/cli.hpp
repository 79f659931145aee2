#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace binmat::cli {

/// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kUsage = 2;

/// Runs one command; args excludes the program name. Everything the command
/// produces goes to `out`, diagnostics and timings to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace binmat::cli
