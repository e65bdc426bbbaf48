#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qxpress::cli {

/// Exit codes are 0 (success), 1 (analysis failure) and 2 (usage error).
enum Exit : int { ok = 0, analysis_failure = 1, usage_error = 2 };

/// Runs one command line. `args` excludes the program name. Data goes to
/// `out`, diagnostics to `err`.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace qxpress::cli
