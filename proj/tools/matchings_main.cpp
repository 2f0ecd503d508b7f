#include <iostream>
#include <string>
#include <vector>

#include "matchings/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return matchings::cli::run(args, std::cout, std::cerr);
}
