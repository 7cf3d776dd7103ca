#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace spreadbound::cli {

enum ExitCode : int {
  kSuccess = 0,
  kPropertyFailed = 1,  // counterexample JSON goes to the error stream
  kInvalidInput = 2,
};

/// Parses args (args[0] is the program name) and runs one subcommand.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace spreadbound::cli
