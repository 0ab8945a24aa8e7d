#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace xyreg {

/// Exit status contract of the command-line tool.
enum ExitCode : int {
  kPropertyHolds = 0,
  kPropertyFails = 1,
  kUsageError = 2,
  kInconclusive = 3,
};

/// Runs the tool on `args` (without the program name). Results go to `out` unless --out is
/// given; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace xyreg
