#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace uqosp::cli {

/// Exit codes: 0 pass, 1 verification failure or numeric singularity, 2 invalid input.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitInvalid = 2;

/// Runs one command line (args excludes the program name). Output is gathered
/// and written once to `out`; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace uqosp::cli
