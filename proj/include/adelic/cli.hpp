// cli.hpp -- command dispatch for the calculator front end.  Kept as a
// library function so tests can drive the full surface without spawning
// processes.
#ifndef ADELIC_CLI_HPP
#define ADELIC_CLI_HPP

#include <string>
#include <vector>

namespace adelic {

struct CommandResult {
  int exit_code;       // 0 success, 2 parse/usage error, 3 domain error
  std::string output;  // result on the last line in canonical form
};

/// Runs one command; args excludes the program name.
CommandResult run_command(const std::vector<std::string>& args);

}  // namespace adelic

#endif
