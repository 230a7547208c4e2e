#include <string>
#include <vector>

#include "cli.hpp"

int main(int argc, char** argv) {
  return rnnids::cli::cli_dispatch(std::vector<std::string>(argv + 1, argv + argc));
}
