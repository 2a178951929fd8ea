#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <vector>

#include "bincayley/matrix.hpp"
#include "bincayley/rational.hpp"

namespace bincayley::testing {

inline RatMatrix rat_matrix(std::initializer_list<std::initializer_list<int>> rows) {
  RatMatrix m(rows.size(), rows.begin()->size());
  std::size_t r = 0;
  for (const auto& row : rows) {
    std::size_t c = 0;
    for (int v : row) m(r, c++) = v;
    ++r;
  }
  return m;
}

inline std::vector<Rat> rats(std::initializer_list<int> v) { return std::vector<Rat>(v.begin(), v.end()); }

// Random integer matrix of the given rank: product of rows x rank and rank x cols factors.
inline IntMatrix random_rank(std::size_t rows, std::size_t cols, std::size_t rank, int spread, std::mt19937_64& gen) {
  std::uniform_int_distribution<int> d(-spread, spread);
  IntMatrix a(rows, rank), b(rank, cols), out(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < rank; ++j) a(i, j) = d(gen);
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = 0; j < cols; ++j) b(i, j) = d(gen);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t l = 0; l < rank; ++l)
      for (std::size_t j = 0; j < cols; ++j) out(i, j) += a(i, l) * b(l, j);
  return out;
}

}  // namespace bincayley::testing
