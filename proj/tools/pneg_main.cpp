#include <iostream>
#include <string>
#include <vector>

#include "pneg/cli.hpp"

int main(int argc, char** argv) {
  return pneg::cli::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout,
                            std::cerr);
}
