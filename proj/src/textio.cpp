#include "bincayley/textio.hpp"

#include <fstream>
#include <sstream>

#include "bincayley/error.hpp"
#include "bincayley/numeric.hpp"

namespace bincayley::textio {

std::vector<Assignment> parse_assignments(std::string_view text) {
  std::vector<Assignment> out;
  std::size_t line_no = 0, start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    std::string_view line = text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (!line.empty()) {
      auto eq = line.rfind('=');
      require(eq != std::string_view::npos, "line " + std::to_string(line_no) + ": expected 'key = value'");
      Assignment a;
      a.key = std::string(trim(line.substr(0, eq)));
      a.value = std::string(trim(line.substr(eq + 1)));
      a.line = line_no;
      require(!a.key.empty() && !a.value.empty(), "line " + std::to_string(line_no) + ": empty key or value");
      out.push_back(std::move(a));
    }
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return out;
}

std::uint64_t parse_natural(std::string_view text, std::size_t line) {
  std::string_view s = trim(text);
  bool ok = !s.empty() && s.size() <= 19;
  for (char c : s) ok = ok && c >= '0' && c <= '9';
  require(ok, "line " + std::to_string(line) + ": expected a natural number, got '" + std::string(text) + "'");
  return std::stoull(std::string(s));
}

Rat parse_rational_field(std::string_view text, std::size_t line) {
  try {
    return parse_rational(text);
  } catch (const InvalidArgument& e) {
    throw InvalidArgument("line " + std::to_string(line) + ": " + e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  require(static_cast<bool>(in), "cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace bincayley::textio
