#ifndef MTDCHAIN_CLI_HPP
#define MTDCHAIN_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace mtdchain {

/// Exit statuses of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitInput = 2, kExitCompute = 3 };

/// Runs the `mtdchain` command line. args[0] is the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mtdchain

#endif  // MTDCHAIN_CLI_HPP
