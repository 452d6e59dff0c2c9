#include <iostream>

#include "metalogic/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return metalogic::cli::run(args, std::cout, std::cerr);
}
