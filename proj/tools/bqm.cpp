#include <iostream>

#include "bqm/cli.hpp"

int main(int argc, char** argv) {
  return bqm::cli::run(argc, argv, std::cout, std::cerr);
}
