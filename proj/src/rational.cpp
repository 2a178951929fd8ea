#include "bincayley/rational.hpp"

#include <limits>

#include "bincayley/error.hpp"
#include "bincayley/numeric.hpp"

namespace bincayley {

void throw_invalid(const std::string& what) { throw InvalidArgument(what); }
void throw_internal(const std::string& what) { throw InternalError(what); }

Int to_int(std::int64_t v) {
  Int z;
  // mpz_class has no int64 constructor on every platform; go through the C API.
  if (v >= std::numeric_limits<long>::min() && v <= std::numeric_limits<long>::max()) {
    z = static_cast<long>(v);
  } else {
    z = std::to_string(v);
  }
  return z;
}

Rat to_rat(std::int64_t num, std::int64_t den) {
  require(den != 0, "zero denominator");
  Rat q(to_int(num), to_int(den));
  q.canonicalize();
  return q;
}

std::string to_string(const Int& z) { return z.get_str(); }

std::string to_string(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

Int parse_integer(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  return Int(std::string(s));
}

}  // namespace

Rat parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  auto slash = s.find('/');
  std::string_view num = s.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
  num = trim(num);
  den = trim(den);
  if (!is_integer_literal(num) || !is_integer_literal(den))
    throw_invalid("malformed rational '" + std::string(text) + "'");
  Int d = parse_integer(den);
  if (d == 0) throw_invalid("zero denominator in '" + std::string(text) + "'");
  Rat q(parse_integer(num), d);
  q.canonicalize();
  return q;
}

bool fits_int64(const Int& z) {
  static const Int lo = Int(std::to_string(std::numeric_limits<std::int64_t>::min()));
  static const Int hi = Int(std::to_string(std::numeric_limits<std::int64_t>::max()));
  return z >= lo && z <= hi;
}

std::int64_t to_int64(const Int& z) {
  if (!fits_int64(z)) throw_invalid("integer " + z.get_str() + " does not fit in 64 bits");
  if (z.fits_slong_p()) return z.get_si();
  return std::stoll(z.get_str());
}

}  // namespace bincayley
