#include <cstdio>
#include <string>
#include <vector>

#include "adelic/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  adelic::CommandResult r = adelic::run_command(args);
  std::fputs(r.output.c_str(), r.exit_code == 0 ? stdout : stderr);
  return r.exit_code;
}
