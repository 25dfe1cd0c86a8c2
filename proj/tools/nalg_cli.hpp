#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nalg::cli {

/// Exit codes.
enum Exit : int { Ok = 0, PropertyFalse = 1, InputError = 2, OverBudget = 3 };

/// Runs one command line (without the program name). The report goes to
/// `out` only when the command succeeds or a property is false; diagnostics
/// go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nalg::cli
