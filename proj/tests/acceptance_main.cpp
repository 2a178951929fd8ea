#include <cstring>
#include <iostream>

#include "bincayley/acceptance.hpp"

int main(int argc, char** argv) {
  bincayley::acceptance::Options options;
  for (int i = 1; i < argc; ++i) options.slow = options.slow || std::strcmp(argv[i], "--slow") == 0;
  int failed = 0;
  for (const auto& r : bincayley::acceptance::run_acceptance(options)) {
    std::cout << bincayley::acceptance::format_line(r) << std::endl;
    failed += !r.passed;
  }
  std::cout << (failed ? "FAILED " : "ALL PASSED ") << failed << " failing criteria" << std::endl;
  return failed ? 1 : 0;
}
