#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace freecalc::cli {

enum ExitCode : int { ok = 0, argument_error = 1, cap_exceeded = 2, verification_failed = 3 };

struct CommandInfo {
    std::string path;       // e.g. "partitions kreweras"
    std::string operations; // library entry points it reaches
    std::vector<std::string> example; // a runnable argument vector
};

// Every leaf command with a runnable example.
const std::vector<CommandInfo>& command_registry();

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace freecalc::cli
