#include <iostream>
#include <string>
#include <vector>

#include "gww/cli.hpp"
#include "gww/errors.hpp"

int main(int argc, char** argv) {
  std::uint64_t seed = 0;
  try {
    seed = gww::seed_from_environment();
  } catch (const gww::MathError& e) {
    std::cerr << e.what() << '\n';
    return gww::kExitParse;
  }
  return gww::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr, seed);
}
