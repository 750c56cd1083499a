#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace turan::cli {

/// Exit codes: success, a failed check (bound, certificate, precondition or
/// freeness), bad invocation.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Same, on the process arguments and standard streams.
int run(int argc, const char* const* argv);

/// Lowercase hex SHA-256 of a file's bytes. Throws std::runtime_error if the
/// file cannot be read.
std::string sha256_file(const std::string& path);

}  // namespace turan::cli
