#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "bincayley/rational.hpp"

// Shared line format of the weight, distribution and family files:
// "key = value" per line, '#' starts a comment, blank lines are ignored.
// The key/value split happens at the last '=' so keys may contain '='.
namespace bincayley::textio {

struct Assignment {
  std::string key;
  std::string value;
  std::size_t line = 0;  // 1-based
};

std::vector<Assignment> parse_assignments(std::string_view text);

std::uint64_t parse_natural(std::string_view text, std::size_t line);
Rat parse_rational_field(std::string_view text, std::size_t line);

std::string read_file(const std::string& path);

}  // namespace bincayley::textio
