#include <iostream>

#include "achiral/cli.hpp"

int main(int argc, char** argv) {
  return achiral::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
