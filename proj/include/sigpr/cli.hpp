#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sigpr {

inline constexpr const char* kVersion = "0.1.0";

/// Runs one CLI invocation (`args` excludes the program name). Results go to
/// `out` or --out, the single-line JSON manifest to `err` or --manifest.
/// Returns 0 on success, 1 on usage errors, 2 on runtime errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sigpr
