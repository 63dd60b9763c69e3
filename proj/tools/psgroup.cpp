#include <iostream>

#include "psgroup/cli.hpp"

int main(int argc, char** argv) {
  return psgroup::cli::run(argc, argv, std::cout, std::cerr);
}
