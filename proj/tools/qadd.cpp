#include <iostream>
#include <string>
#include <vector>

#include "qadd/cli.hpp"

int main(int argc, char** argv) {
  try {
    const std::vector<std::string> args(argv + 1, argv + argc);
    return qadd::cli::run_cli(args);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return qadd::cli::kExitInternal;
  }
}
