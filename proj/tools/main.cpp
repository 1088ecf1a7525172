#include <iostream>

#include "snb/cli.hpp"

int main(int argc, char** argv) {
  return snb::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
