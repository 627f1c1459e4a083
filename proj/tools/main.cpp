#include <iostream>

#include "eun_cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const eun::cli::CommandResult result = eun::cli::run_command(args);
  std::cout << result.out;
  std::cerr << result.err;
  return result.exit_code;
}
