#include <iostream>

#include "orchard/cli.hpp"

int main(int argc, char** argv) {
  return orchard::run_cli(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
