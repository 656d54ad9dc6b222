#include <cstdlib>
#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  std::optional<std::string> env_cache;
  if (const char* p = std::getenv("PLANEPART_CACHE"); p && *p) env_cache = p;
  return planepart::cli::run(args, std::cout, std::cerr, env_cache);
}
