#include <iostream>

#include "mzsim/cli.hpp"

int main(int argc, char** argv) {
  return mzsim::cli::run_command(argc, argv, std::cout, std::cerr);
}
