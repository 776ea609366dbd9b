#include <iostream>

#include <CLI11.hpp>

#include "ppc/acceptance.hpp"

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  ppc::acceptance::Options options;
  int only = 0;
  app.add_option("--seed", options.seed, "root seed");
  app.add_option("--threads", options.threads, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--only", only, "run a single criterion (1-8)")->check(CLI::Range(1, 8));
  CLI11_PARSE(app, argc, argv);
  return ppc::acceptance::run_all(options, std::cout, only) ? 0 : 1;
}
