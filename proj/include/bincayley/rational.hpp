#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace bincayley {

using Int = mpz_class;
using Rat = mpq_class;

Int to_int(std::int64_t v);
Rat to_rat(std::int64_t num, std::int64_t den = 1);

// "num/den" with the denominator omitted when it is 1.
std::string to_string(const Rat& q);
std::string to_string(const Int& z);

// Accepts "a", "-a", "a/b"; the result is canonical.
Rat parse_rational(std::string_view text);

bool fits_int64(const Int& z);
std::int64_t to_int64(const Int& z);

}  // namespace bincayley
