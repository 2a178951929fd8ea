#include "bincayley/matrix.hpp"

#include <sstream>

#include "bincayley/numeric.hpp"

namespace bincayley {

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = Rat(to_int(m(r, c)));
  return out;
}

RatMatrix transpose(const RatMatrix& m) {
  RatMatrix out(m.cols(), m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(c, r) = m(r, c);
  return out;
}

RatMatrix multiply(const RatMatrix& a, const RatMatrix& b) {
  require(a.cols() == b.rows(), "matrix product dimension mismatch");
  RatMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t l = 0; l < a.cols(); ++l) {
      if (sgn(a(i, l)) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (sgn(b(l, j)) != 0) out(i, j) += a(i, l) * b(l, j);
    }
  return out;
}

std::vector<Rat> multiply(const RatMatrix& a, std::span<const Rat> x) {
  require(a.cols() == x.size(), "matrix-vector dimension mismatch");
  std::vector<Rat> out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (sgn(a(i, j)) != 0 && sgn(x[j]) != 0) out[i] += a(i, j) * x[j];
  return out;
}

std::string to_csv(const RatMatrix& m) {
  std::ostringstream os;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) os << ',';
      os << to_string(m(r, c));
    }
    os << '\n';
  }
  return os.str();
}

RatMatrix parse_csv(std::string_view text) {
  std::vector<std::vector<Rat>> rows;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    std::string_view line = trim(text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start));
    if (!line.empty()) {
      std::vector<Rat> row;
      std::size_t s = 0;
      while (true) {
        auto comma = line.find(',', s);
        row.push_back(parse_rational(line.substr(s, comma == std::string_view::npos ? std::string_view::npos : comma - s)));
        if (comma == std::string_view::npos) break;
        s = comma + 1;
      }
      if (!rows.empty() && row.size() != rows.front().size())
        throw_invalid("ragged matrix CSV: row " + std::to_string(rows.size() + 1) + " has " +
                      std::to_string(row.size()) + " entries");
      rows.push_back(std::move(row));
    }
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  RatMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = rows[r][c];
  return m;
}

}  // namespace bincayley
