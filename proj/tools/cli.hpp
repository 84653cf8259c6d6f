#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace knotcert::cli {

enum ExitCode : int { kOk = 0, kNotCertified = 1, kInputError = 2, kCapExceeded = 3 };

// args excludes the program name. Reports go to `out` (or --out), errors to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace knotcert::cli
