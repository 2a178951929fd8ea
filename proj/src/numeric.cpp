#include "bincayley/numeric.hpp"

#include <string>

#include "bincayley/error.hpp"

namespace bincayley {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw_invalid("integer overflow in addition");
  return r;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw_invalid("integer overflow in multiplication");
  return r;
}

std::uint64_t checked_pow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exp; ++i) r = checked_mul(r, base);
  return r;
}

std::uint64_t factorial(unsigned n) {
  std::uint64_t r = 1;
  for (unsigned i = 2; i <= n; ++i) r = checked_mul(r, i);
  return r;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 r = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    r = r * (n - i) / (i + 1);
    if (r > UINT64_MAX) throw_invalid("binomial coefficient overflows 64 bits");
  }
  return static_cast<std::uint64_t>(r);
}

std::string_view trim(std::string_view s) {
  const char* ws = " \t\r\n";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::vector<int> parse_int_list(std::string_view text, char sep) {
  std::vector<int> out;
  std::string_view s = trim(text);
  if (s.empty()) return out;
  while (true) {
    auto pos = s.find(sep);
    std::string_view tok = trim(s.substr(0, pos));
    if (tok.empty()) throw_invalid("empty entry in list '" + std::string(text) + "'");
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(std::string(tok), &used);
    } catch (const std::exception&) {
      throw_invalid("malformed integer '" + std::string(tok) + "'");
    }
    if (used != tok.size() || v < INT32_MIN || v > INT32_MAX)
      throw_invalid("malformed integer '" + std::string(tok) + "'");
    out.push_back(static_cast<int>(v));
    if (pos == std::string_view::npos) break;
    s = s.substr(pos + 1);
  }
  return out;
}

}  // namespace bincayley
