#include <iostream>

#include "oddsolve/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return oddsolve::cli::run(std::move(args), std::cout, std::cerr);
}
