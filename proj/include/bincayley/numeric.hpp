#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace bincayley {

// Overflow-checked helpers; they throw InvalidArgument on overflow.
std::uint64_t checked_add(std::uint64_t a, std::uint64_t b);
std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b);
std::uint64_t checked_pow(std::uint64_t base, unsigned exp);
std::uint64_t factorial(unsigned n);
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

// Comma-separated integers, e.g. "2,1" or "3,1,2". Whitespace is ignored.
std::vector<int> parse_int_list(std::string_view text, char sep = ',');

std::string_view trim(std::string_view s);

}  // namespace bincayley
