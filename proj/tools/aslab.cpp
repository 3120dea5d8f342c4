#include <string>
#include <vector>

#include "aslab/harness.hpp"

int main(int argc, char** argv) {
  return aslab::cli::run(std::vector<std::string>(argv + 1, argv + argc));
}
