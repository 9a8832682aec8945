#include <iostream>

#include "humbert/cli/cli.hpp"

int main(int argc, char** argv) {
  return humbert::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
