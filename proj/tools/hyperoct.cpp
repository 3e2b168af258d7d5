#include <iostream>

#include "hyperoct/cli.hpp"

int main(int argc, char** argv) {
  return hyperoct::cli::run_cli(argc, argv, std::cout, std::cerr);
}
