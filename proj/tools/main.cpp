#include <iostream>

#include "sympal/cli.hpp"

int main(int argc, char** argv) {
  return sympal::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
