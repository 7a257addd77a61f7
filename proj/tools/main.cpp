#include "hypotria/cli.hpp"

#include <cstdlib>
#include <iostream>

int main(int argc, char** argv) {
  std::optional<std::string> env_format;
  if (const char* value = std::getenv("HYPOTRIA_FORMAT")) env_format = value;
  return hypotria::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr, env_format);
}
