#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lprog::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1; // bad flags or violated preconditions
inline constexpr int kExitFinding = 2;    // numeric failure, exhaustion, or a bound not met

/// Runs one command line (without the program name). Reports go to `out`
/// unless --output names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace lprog::cli
