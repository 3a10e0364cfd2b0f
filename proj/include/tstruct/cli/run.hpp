// The tstruct command line: argument parsing, dispatch and report output.
#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tstruct::cli {

/// Exit codes: 0 success or true, 1 checked false (with a certificate in the report), 2 input error.
enum ExitCode { kOk = 0, kFalse = 1, kInputError = 2 };

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tstruct::cli
