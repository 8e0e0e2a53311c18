#ifndef FILLPERM_CLI_HPP
#define FILLPERM_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

#include "fillperm/filling.hpp"

namespace fillperm::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kValidationFailed = 1,
  kGuardRefused = 2,
  kUsage = 64,
  kDataError = 65,
  kIoError = 74,
};

inline constexpr const char* kVersion = "1.0.0";

/// Runs one command line (args excludes the program name). JSON or SVG data
/// goes to `out`, diagnostics to `err`. Never throws.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Regular n-gon with directed, labelled edges and a chord joining the
/// midpoints of each identified edge pair. SVG 1.1.
std::string render_svg(const FillingPermutation& fp);

}  // namespace fillperm::cli

#endif  // FILLPERM_CLI_HPP
