#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hopfcyc::cli {

enum Exit : int { kOk = 0, kCheckFailed = 1, kInputError = 2 };

// Runs one command line (args excludes the program name).  The report goes
// to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hopfcyc::cli
