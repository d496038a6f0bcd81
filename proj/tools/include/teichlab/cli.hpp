#pragma once
// Command-line front end. `run` is what the executable calls; tests call it
// directly with captured streams.

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace teichlab::cli {

/// Process exit status for each machine-readable error code.
enum ExitCode : int {
  kOk = 0,
  kInternal = 1,
  kUsage = 2,
  kInvariant = 3,
  kDegenerate = 4,
  kInvalidSigma = 5,
  kConstruction = 6,
  kExistenceUnknown = 7,
  kIo = 8,
};

int exit_code_for(std::string_view error_code) noexcept;

/// `args` excludes the program name. Results go to `out` (or the --out file),
/// errors to `err` as one JSON line {"error": code, "message": text}.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// 9 significant digits, the precision of every emitted number.
double round_sig9(double x);
std::string format_sig9(double x);

}  // namespace teichlab::cli
