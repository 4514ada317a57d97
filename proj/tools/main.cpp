#include <unistd.h>

#include <cstdlib>
#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  const bool color = isatty(STDOUT_FILENO) && std::getenv("NO_COLOR") == nullptr;
  return coherent::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr, color);
}
