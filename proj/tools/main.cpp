#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "bincayley/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  std::ostringstream out;
  const int code = bincayley::cli::run(args, out, std::cerr);
  std::cout << out.str() << std::flush;
  return code;
}
