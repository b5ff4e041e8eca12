#include <iostream>

#include "sumkit_cli/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return sumkit::cli::run(args, std::cout, std::cerr);
}
