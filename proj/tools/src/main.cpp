#include <iostream>
#include <string>
#include <vector>

#include "spreadbound/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return spreadbound::cli::run(args, std::cout, std::cerr);
}
