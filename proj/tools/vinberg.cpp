#include <iostream>

#include "vinberg/cli/driver.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return vinberg::cli::run_cli(args, std::cout, std::cerr);
}
