#pragma once

#include <string>
#include <vector>

namespace bincayley::acceptance {

struct Options {
  bool slow = false;  // adds the large exact suites
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

// Runs every acceptance criterion; exceptions inside a criterion count as a failure.
std::vector<CriterionResult> run_acceptance(const Options& options);

// "[PASS] 3 kernel-vs-lis: ..." style line.
std::string format_line(const CriterionResult& r);

}  // namespace bincayley::acceptance
