#include <iostream>
#include <string>
#include <vector>

#include "erange/tools/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return erange::tools::cli_dispatch(args, std::cout, std::cerr);
}
