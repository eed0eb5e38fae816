#include <iostream>
#include <string>
#include <vector>

#include "biharm/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return biharm::cli::main_entry(args, std::cout, std::cerr);
}
