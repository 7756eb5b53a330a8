#include <iostream>

#include "specht/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  specht::CliResult r = specht::run_cli(args);
  if (!r.body.empty()) std::cout << r.body.dump() << '\n';
  return r.code;
}
