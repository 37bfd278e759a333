#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hilbertnorm::cli {

enum ExitCode : int { kOk = 0, kDomainError = 1, kAccuracyError = 2 };

/// Entry point of the `hilbertnorm` tool. args excludes the program name.
/// Results go to `out` (or to --out), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hilbertnorm::cli
