#include <string>
#include <vector>

#include "lvr/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return lvr::cli_run(args);
}
