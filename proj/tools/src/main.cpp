#include <cstdlib>
#include <iostream>

#include "polylab_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  std::optional<std::string> env_seed;
  if (const char* s = std::getenv("POLYLAB_SEED")) env_seed = s;
  return polylab::cli::run(args, std::cout, std::cerr, env_seed);
}
