#include <iostream>
#include <string>
#include <vector>

#include "graphspir/cli.h"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return graphspir::cli::Run(args, std::cout, std::cerr,
                             graphspir::cli::ProcessEnvironment());
}
