#include <iostream>

#include "irs_si/cli.hpp"

int main(int argc, char** argv) {
  return irs_si::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
