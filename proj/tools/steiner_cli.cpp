#include <iostream>
#include <string>
#include <vector>

#include "steiner/app.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return steiner::app::run(args, std::cout, std::cerr);
}
