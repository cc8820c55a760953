#pragma once

#include <string>
#include <vector>

namespace momest {

/// CLI entry point. Exit codes: 0 success, 1 usage error, 2 estimation /
/// domain error (e.g. NoCollision), 3 I/O error. Errors print a single
/// machine-parsable line `error: <kind>: <detail>` on stderr.
int run_cli(int argc, const char* const* argv);

/// Convenience overload for tests; args excludes the program name.
int run_cli(const std::vector<std::string>& args);

} // namespace momest
