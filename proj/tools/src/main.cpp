#include <iostream>

#include "ppc/cli.hpp"

int main(int argc, char** argv) {
  return ppc::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
