#include <cstdlib>
#include <iostream>
#include <unistd.h>

#include "parcov/app/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  bool color = std::getenv("PARCOV_NO_COLOR") == nullptr && isatty(STDERR_FILENO);
  return parcov::app::run_cli(args, {std::cout, std::cerr, color});
}
