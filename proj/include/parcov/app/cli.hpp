#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace parcov::app {

enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,  // verify mismatches, bench bound violations
  kExitInput = 2,
  kExitResource = 3,
};

struct CliStreams {
  std::ostream& out;  // JSON or instance text
  std::ostream& err;  // human summary
  bool color = false;
};

// Arguments without the program name.
int run_cli(const std::vector<std::string>& args, CliStreams streams);

}  // namespace parcov::app
