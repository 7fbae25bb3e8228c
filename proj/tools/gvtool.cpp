#include <iostream>
#include <string>
#include <vector>

#include "gvtools/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return gvt::cli::run(args, std::cin, std::cout, std::cerr);
}
