#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "gorbit/report.hpp"

namespace gorbit {

/// Exit codes of the command surface.
enum ExitCode : int {
  kExitOk = 0,
  kExitInternal = 1,
  kExitInputError = 2,
  kExitExpectMismatch = 3,
};

/// Runs one command; args excludes the program name. Reports go to `out`
/// (or the -o file for report-producing commands), diagnostics to `err`.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Human-readable rendering of a report envelope.
std::string render_text(const Json& envelope);

/// Envelope with the timing field removed, for byte comparisons.
Json strip_timing(Json envelope);

}  // namespace gorbit
