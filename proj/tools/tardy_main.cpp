#include <iostream>
#include <string>
#include <vector>

#include "tardy/cli_app.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return tardy::cli_run(args, std::cout, std::cerr);
}
