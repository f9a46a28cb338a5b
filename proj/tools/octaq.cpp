// SPDX-License-Identifier: Apache-2.0
#include "octaq/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return octaq::cli::run(args, std::cout, std::cerr);
}
