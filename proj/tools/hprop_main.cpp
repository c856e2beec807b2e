#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "hprop/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  try {
    return hprop::cli::run(args, std::cout, std::cerr);
  } catch (const std::exception& e) {
    // Internal consistency failures only; input errors are mapped inside run().
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
}
