#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lyap::cli {

enum ExitCode : int {
  kOk = 0,
  kValidation = 2,
  kConvergence = 3,
  kStatisticalFail = 4,
};

// Runs one command line (without the program name). Reports go to out (or the
// --out file); structured errors go to err as a JSON object.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Analytic-vs-Monte-Carlo outcome from the largest |z| over all comparisons:
// PASS within 3 standard errors; exit code 4 beyond 5.
std::string compare_verdict(double worst_abs_z);
int compare_exit_code(double worst_abs_z);

// Formats with 17 significant digits; the CSV number format.
std::string format_number(double v);

}  // namespace lyap::cli
