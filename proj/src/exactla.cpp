#include "bincayley/exactla.hpp"

#include <algorithm>

#include "bincayley/error.hpp"
#include "bincayley/modular.hpp"

namespace bincayley::exactla {

namespace {

// Matrices whose smaller side is at most this use fraction-free elimination.
constexpr std::size_t kBareissLimit = 48;

using IntEntries = Matrix<Int>;

// Scales each row by the lcm of its denominators; rank and kernel are unchanged.
IntEntries clear_denominators(const RatMatrix& m, Int* scale_product = nullptr) {
  IntEntries out(m.rows(), m.cols());
  Int prod = 1;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Int l = 1;
    for (const Rat& q : m.row(r)) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c).get_num() * (l / m(r, c).get_den());
    prod *= l;
  }
  if (scale_product) *scale_product = prod;
  return out;
}

bool to_int_matrix(const IntEntries& m, IntMatrix& out) {
  out = IntMatrix(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (!fits_int64(m(r, c))) return false;
      out(r, c) = to_int64(m(r, c));
    }
  return true;
}

struct Echelon {
  IntEntries u;
  std::vector<std::size_t> pivots;
  std::vector<std::size_t> free_cols;
  int sign = 1;
};

// Fraction-free forward elimination; every intermediate entry is a minor of
// the input, so the division by the previous pivot is exact.
Echelon bareiss_echelon(IntEntries m) {
  Echelon e;
  const std::size_t rows = m.rows(), cols = m.cols();
  Int prev = 1;
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols; ++col) {
    if (r == rows) {
      e.free_cols.push_back(col);
      continue;
    }
    std::size_t piv = r;
    while (piv < rows && m(piv, col) == 0) ++piv;
    if (piv == rows) {
      e.free_cols.push_back(col);
      continue;
    }
    if (piv != r) {
      std::swap_ranges(m.row(piv).begin(), m.row(piv).end(), m.row(r).begin());
      e.sign = -e.sign;
    }
    const Int& p = m(r, col);
    for (std::size_t i = r + 1; i < rows; ++i) {
      const Int lead = m(i, col);
      for (std::size_t j = col + 1; j < cols; ++j) {
        Int v = p * m(i, j) - lead * m(r, j);
        mpz_divexact(m(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      m(i, col) = 0;
    }
    prev = p;
    e.pivots.push_back(col);
    ++r;
  }
  e.u = std::move(m);
  return e;
}

std::vector<Vector> free_form_kernel(const Echelon& e) {
  const std::size_t r = e.pivots.size();
  std::vector<Vector> out;
  out.reserve(e.free_cols.size());
  for (std::size_t f : e.free_cols) {
    Vector x(e.u.cols());
    x[f] = 1;
    for (std::size_t i = r; i-- > 0;) {
      const std::size_t pc = e.pivots[i];
      Rat s = Rat(e.u(i, f));
      for (std::size_t i2 = i + 1; i2 < r; ++i2) {
        const std::size_t c = e.pivots[i2];
        if (sgn(x[c]) != 0 && e.u(i, c) != 0) s += Rat(e.u(i, c)) * x[c];
      }
      x[pc] = -s / Rat(e.u(i, pc));
    }
    out.push_back(std::move(x));
  }
  return out;
}

bool use_bareiss(std::size_t rows, std::size_t cols) { return std::min(rows, cols) <= kBareissLimit; }

}  // namespace

namespace detail {

CertifiedRank bareiss_certified(const RatMatrix& m, bool want_kernel) {
  Echelon e = bareiss_echelon(clear_denominators(m));
  CertifiedRank out;
  out.rank = e.pivots.size();
  out.pivot_cols = e.pivots;
  if (want_kernel) out.kernel = free_form_kernel(e);
  return out;
}

}  // namespace detail

void normalize_leading_one(Vector& v) {
  auto it = std::find_if(v.begin(), v.end(), [](const Rat& q) { return sgn(q) != 0; });
  if (it == v.end()) return;
  const Rat lead = *it;
  for (Rat& q : v) q /= lead;
}

namespace bareiss {

RankNullity rank_nullity(const RatMatrix& m) {
  Echelon e = bareiss_echelon(clear_denominators(m));
  return {e.pivots.size(), m.cols() - e.pivots.size()};
}

std::vector<Vector> kernel_basis(const RatMatrix& m) {
  auto basis = free_form_kernel(bareiss_echelon(clear_denominators(m)));
  for (auto& v : basis) normalize_leading_one(v);
  return basis;
}

}  // namespace bareiss

RankNullity rank_nullity(const IntMatrix& m) {
  if (use_bareiss(m.rows(), m.cols())) return bareiss::rank_nullity(to_rational(m));
  CertifiedRank c = certified_rank(m, false);
  return {c.rank, m.cols() - c.rank};
}

RankNullity rank_nullity(const RatMatrix& m) {
  if (use_bareiss(m.rows(), m.cols())) return bareiss::rank_nullity(m);
  IntMatrix im;
  if (!to_int_matrix(clear_denominators(m), im)) return bareiss::rank_nullity(m);
  CertifiedRank c = certified_rank(im, false);
  return {c.rank, m.cols() - c.rank};
}

std::vector<Vector> kernel_basis(const IntMatrix& m) {
  if (use_bareiss(m.rows(), m.cols())) return bareiss::kernel_basis(to_rational(m));
  auto basis = certified_rank(m, true).kernel;
  for (auto& v : basis) normalize_leading_one(v);
  return basis;
}

std::vector<Vector> kernel_basis(const RatMatrix& m) {
  if (use_bareiss(m.rows(), m.cols())) return bareiss::kernel_basis(m);
  IntMatrix im;
  if (!to_int_matrix(clear_denominators(m), im)) return bareiss::kernel_basis(m);
  auto basis = certified_rank(im, true).kernel;
  for (auto& v : basis) normalize_leading_one(v);
  return basis;
}

Rat determinant(const RatMatrix& m) {
  require(m.rows() == m.cols(), "determinant of a non-square matrix");
  if (m.rows() == 0) return 1;
  Int scale;
  Echelon e = bareiss_echelon(clear_denominators(m, &scale));
  if (e.pivots.size() < m.rows()) return 0;
  Rat det(e.u(m.rows() - 1, m.cols() - 1) * e.sign, scale);
  det.canonicalize();
  return det;
}

std::optional<Vector> solve(const RatMatrix& a, std::span<const Rat> b) {
  require(a.rows() == b.size(), "right-hand side length does not match row count");
  const std::size_t rows = a.rows(), cols = a.cols();
  RatMatrix aug(rows, cols + 1);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) aug(r, c) = a(r, c);
    aug(r, cols) = b[r];
  }
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t piv = r;
    while (piv < rows && sgn(aug(piv, col)) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r) std::swap_ranges(aug.row(piv).begin(), aug.row(piv).end(), aug.row(r).begin());
    const Rat inv = 1 / aug(r, col);
    for (std::size_t c = col; c <= cols; ++c) aug(r, c) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(aug(i, col)) == 0) continue;
      const Rat f = aug(i, col);
      for (std::size_t c = col; c <= cols; ++c)
        if (sgn(aug(r, c)) != 0) aug(i, c) -= f * aug(r, c);
    }
    pivots.push_back(col);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (sgn(aug(i, cols)) != 0) return std::nullopt;
  Vector x(cols);
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(i, cols);
  return x;
}

}  // namespace bincayley::exactla
