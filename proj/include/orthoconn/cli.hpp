#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace orthoconn::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitInvalid = 2;

/// Runs one command. Serialized results go to `out`, diagnostics to `err`.
/// Returns 0 on success, 1 on a verification mismatch, 2 on invalid input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace orthoconn::cli
