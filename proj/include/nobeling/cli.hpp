#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace nobeling::cli {

// Exit codes are part of the command-line contract.
enum ExitCode : int {
    kOk = 0,
    kFailure = 1,
    kParse = 2,
    kResource = 3,
    kInvariant = 4,
};

// Runs the tool; args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nobeling::cli
