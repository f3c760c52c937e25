#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace omcube::cli {

enum ExitCode : int {
    exit_ok = 0,
    exit_internal = 1,
    exit_precondition = 2,
    exit_resource = 3,
    exit_verdict = 4,
};

// Runs one command. args excludes the program name. The report goes to `out`,
// human-readable errors to `err`; `in` backs the "-" input path.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace omcube::cli
