#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sqbound::cli {

enum ExitCode : int {
    ok = 0,
    violation = 1,
    usage_error = 2,
    parse_error = 3,
    io_error = 4,
    numerical_error = 5,
};

// Runs `sqbound <subcommand> ...`; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sqbound::cli
