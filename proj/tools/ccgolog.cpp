#include <iostream>
#include <string>
#include <vector>

#include "ccgolog/bundled.hpp"
#include "ccgolog/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return ccgolog::run_cli(args, std::cout, std::cerr, ccgolog::bundled_scenarios());
}
