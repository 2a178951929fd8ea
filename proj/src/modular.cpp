#include "bincayley/modular.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>

#include "bincayley/error.hpp"
#include "bincayley/exactla.hpp"
#include "bincayley/simd/kernels.hpp"

namespace bincayley::exactla {

namespace detail {
// Defined in exactla.cpp: fraction-free route returning free-column kernel form.
CertifiedRank bareiss_certified(const RatMatrix& m, bool want_kernel);
}  // namespace detail

namespace {

std::uint32_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint32_t p) {
  std::uint64_t r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) { return pow_mod(a, p - 2, p); }

std::uint32_t reduce_i64(std::int64_t v, std::uint32_t p) {
  std::int64_t r = v % static_cast<std::int64_t>(p);
  return static_cast<std::uint32_t>(r < 0 ? r + p : r);
}

// Single-word reconstruction for one prime; mirrors the mpz version.
bool reconstruct_small(std::uint32_t residue, std::uint32_t p, std::int64_t& num, std::int64_t& den) {
  const std::int64_t bound = static_cast<std::int64_t>(std::sqrt(static_cast<double>(p) / 2.0));
  std::int64_t r0 = p, r1 = residue;
  std::int64_t t0 = 0, t1 = 1;
  while (r1 > bound) {
    std::int64_t q = r0 / r1;
    std::int64_t r2 = r0 - q * r1;
    std::int64_t t2 = t0 - q * t1;
    r0 = r1;
    r1 = r2;
    t0 = t1;
    t1 = t2;
  }
  if (t1 == 0 || std::llabs(t1) > bound) return false;
  if (t1 < 0) {
    t1 = -t1;
    r1 = -r1;
  }
  if (std::gcd(r1, t1) != 1) return false;
  num = r1;
  den = t1;
  return true;
}

bool lex_less(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

class KernelCertifier {
 public:
  KernelCertifier(const IntMatrix& a, const std::vector<std::size_t>& pivots)
      : a_(a), pivots_(pivots) {
    for (std::int64_t v : a.data()) max_abs_a_ = std::max<std::uint64_t>(max_abs_a_, std::llabs(v));
    if (max_abs_a_ < (1ull << 31)) {
      ap_ = Matrix<std::int32_t>(a.rows(), pivots.size());
      for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t i = 0; i < pivots.size(); ++i)
          ap_(r, i) = static_cast<std::int32_t>(a(r, pivots[i]));
    }
  }

  // True when column `col` equals sum_i x[i] * column pivots[i] exactly.
  bool check(std::size_t col, const std::vector<Rat>& x) const {
    Int den = 1;
    for (const Rat& q : x) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
    std::vector<Int> xi(x.size());
    Int max_x = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      xi[i] = x[i].get_num() * (den / x[i].get_den());
      Int ab = abs(xi[i]);
      if (ab > max_x) max_x = ab;
    }
    const double bound_bits = std::log2(static_cast<double>(max_abs_a_) + 1) +
                              std::log2(max_x.get_d() + 1) +
                              std::log2(static_cast<double>(x.size()) + 1);
    const double lhs_bits = std::log2(static_cast<double>(max_abs_a_) + 1) + std::log2(den.get_d() + 1);
    if (ap_.rows() == a_.rows() && max_x < Int(1l << 31) && bound_bits < 61 && lhs_bits < 61)
      return check_i32(col, den.get_si(), xi);
    const bool fits_words = mpz_sizeinbase(max_x.get_mpz_t(), 2) <= 62 && mpz_sizeinbase(den.get_mpz_t(), 2) <= 62;
    if (fits_words && bound_bits < 125 && lhs_bits < 125) return check_i128(col, xi, den);
    return check_mpz(col, xi, den);
  }

 private:
  bool check_i32(std::size_t col, std::int64_t den, const std::vector<Int>& xi) const {
    std::vector<std::int32_t> xv(xi.size());
    for (std::size_t i = 0; i < xi.size(); ++i) xv[i] = static_cast<std::int32_t>(xi[i].get_si());
    const auto& k = simd::active_kernels();
    for (std::size_t r = 0; r < a_.rows(); ++r) {
      if (k.dot_i32(ap_.row(r).data(), xv.data(), xv.size()) != den * a_(r, col)) return false;
    }
    return true;
  }

  bool check_i128(std::size_t col, const std::vector<Int>& xi, const Int& den) const {
    auto to128 = [](const Int& z) {
      return static_cast<__int128>(to_int64(z));
    };
    std::vector<__int128> xv(xi.size());
    for (std::size_t i = 0; i < xi.size(); ++i) xv[i] = to128(xi[i]);
    const __int128 d = to128(den);
    for (std::size_t r = 0; r < a_.rows(); ++r) {
      __int128 s = 0;
      for (std::size_t i = 0; i < pivots_.size(); ++i) s += a_(r, pivots_[i]) * xv[i];
      if (s != d * a_(r, col)) return false;
    }
    return true;
  }

  bool check_mpz(std::size_t col, const std::vector<Int>& xi, const Int& den) const {
    for (std::size_t r = 0; r < a_.rows(); ++r) {
      Int s = 0;
      for (std::size_t i = 0; i < pivots_.size(); ++i) s += to_int(a_(r, pivots_[i])) * xi[i];
      if (s != den * to_int(a_(r, col))) return false;
    }
    return true;
  }

  const IntMatrix& a_;
  const std::vector<std::size_t>& pivots_;
  std::uint64_t max_abs_a_ = 0;
  Matrix<std::int32_t> ap_;
};

}  // namespace

bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t q : {2u, 3u, 5u, 7u, 11u, 13u}) {
    if (n % q == 0) return n == q;
  }
  std::uint32_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Bases 2, 7, 61 are deterministic for all 32-bit n.
  for (std::uint32_t a : {2u, 7u, 61u}) {
    if (a % n == 0) continue;
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned i = 1; i < s; ++i) {
      x = x * x % n;
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::uint32_t> elimination_primes(std::size_t count) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t n = simd::kMaxModulus - 1; out.size() < count; n -= 2)
    if (is_prime_u32(n)) out.push_back(n);
  return out;
}

ModularEchelon echelon_mod_p(const IntMatrix& a, std::uint32_t p, bool want_coeffs) {
  require(p > 2 && p < simd::kMaxModulus, "modulus out of range");
  const auto& k = simd::active_kernels();
  const std::size_t rows = a.rows(), cols = a.cols();
  ModMatrix w(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) w(r, c) = reduce_i64(a(r, c), p);

  ModularEchelon out;
  out.prime = p;
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols; ++col) {
    if (r == rows) {
      out.free_cols.push_back(col);
      continue;
    }
    std::size_t piv = r;
    while (piv < rows && w(piv, col) == 0) ++piv;
    if (piv == rows) {
      out.free_cols.push_back(col);
      continue;
    }
    if (piv != r) std::swap_ranges(w.row(piv).begin() + col, w.row(piv).end(), w.row(r).begin() + col);
    std::uint32_t* prow = w.row(r).data() + col;
    const std::size_t len = cols - col;
    k.scale_mod(prow, simd::make_mul_const(inv_mod(prow[0], p), p), len, p);
    for (std::size_t i = r + 1; i < rows; ++i) {
      std::uint32_t lead = w(i, col);
      if (lead == 0) continue;
      k.axpy_mod(w.row(i).data() + col, prow, simd::make_mul_const(p - lead, p), len, p);
    }
    out.pivot_cols.push_back(col);
    ++r;
  }
  out.rank = r;

  if (want_coeffs && !out.free_cols.empty()) {
    const std::size_t nf = out.free_cols.size();
    ModMatrix x(r, nf);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < nf; ++j) x(i, j) = w(i, out.free_cols[j]);
    for (std::size_t i = r; i-- > 0;) {
      for (std::size_t i2 = i + 1; i2 < r; ++i2) {
        std::uint32_t u = w(i, out.pivot_cols[i2]);
        if (u == 0) continue;
        k.axpy_mod(x.row(i).data(), x.row(i2).data(), simd::make_mul_const(p - u, p), nf, p);
      }
    }
    out.coeffs = std::move(x);
  }
  return out;
}

bool rational_reconstruct(const Int& residue, const Int& modulus, Rat& out) {
  Int bound;
  mpz_sqrt(bound.get_mpz_t(), Int(modulus / 2).get_mpz_t());
  Int r0 = modulus, r1 = residue % modulus;
  if (r1 < 0) r1 += modulus;
  Int t0 = 0, t1 = 1, q, tmp;
  while (r1 > bound) {
    mpz_fdiv_q(q.get_mpz_t(), r0.get_mpz_t(), r1.get_mpz_t());
    tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
  }
  if (t1 == 0 || abs(t1) > bound) return false;
  if (t1 < 0) {
    t1 = -t1;
    r1 = -r1;
  }
  Int g;
  mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), t1.get_mpz_t());
  if (g != 1) return false;
  out = Rat(r1, t1);
  return true;
}

CertifiedRank certified_rank(const IntMatrix& a, bool want_kernel) {
  constexpr std::size_t kMaxPrimes = 6;
  static const std::vector<std::uint32_t> primes = elimination_primes(kMaxPrimes);

  ModularEchelon best = echelon_mod_p(a, primes[0], true);
  CertifiedRank out;
  out.primes_used = 1;
  if (best.free_cols.empty() || (!want_kernel && best.rank == a.rows())) {
    // Rank attains an upper limit (column or row count): nothing to certify.
    out.rank = best.rank;
    out.pivot_cols = best.pivot_cols;
    return out;
  }

  std::vector<Int> residues;
  Int modulus;
  std::size_t primes_in_use = 0;
  auto restart = [&](const ModularEchelon& e) {
    residues.assign(e.coeffs.data().begin(), e.coeffs.data().end());
    modulus = e.prime;
    primes_in_use = 1;
  };

  // Reconstructs the coefficient columns and checks them over Z.
  auto try_certify = [&](std::vector<std::vector<Rat>>& cols) {
    const std::size_t r = best.rank, nf = best.free_cols.size();
    cols.assign(nf, std::vector<Rat>(r));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < nf; ++j) {
        if (primes_in_use == 1) {
          std::int64_t num, den;
          if (!reconstruct_small(best.coeffs(i, j), best.prime, num, den)) return false;
          cols[j][i] = to_rat(num, den);
        } else if (!rational_reconstruct(residues[i * nf + j], modulus, cols[j][i])) {
          return false;
        }
      }
    KernelCertifier cert(a, best.pivot_cols);
    for (std::size_t j = 0; j < nf; ++j)
      if (!cert.check(best.free_cols[j], cols[j])) return false;
    return true;
  };

  restart(best);
  bool changed = true;
  std::vector<std::vector<Rat>> cols;
  for (std::size_t t = 1;; ++t) {
    if (changed && try_certify(cols)) {
      out.rank = best.rank;
      out.pivot_cols = best.pivot_cols;
      out.primes_used = t;
      if (want_kernel) {
        out.kernel.reserve(cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) {
          std::vector<Rat> v(a.cols());
          v[best.free_cols[j]] = 1;
          for (std::size_t i = 0; i < best.rank; ++i) v[best.pivot_cols[i]] = -cols[j][i];
          out.kernel.push_back(std::move(v));
        }
      }
      return out;
    }
    changed = false;
    if (t == kMaxPrimes) break;

    ModularEchelon e = echelon_mod_p(a, primes[t], true);
    if (e.rank > best.rank || (e.rank == best.rank && lex_less(e.pivot_cols, best.pivot_cols))) {
      // The earlier primes were unlucky; start over from this one.
      best = std::move(e);
      restart(best);
      changed = true;
      continue;
    }
    if (e.rank < best.rank || e.pivot_cols != best.pivot_cols) continue;
    const std::uint32_t p = e.prime;
    Int minv, pz = p;
    mpz_invert(minv.get_mpz_t(), modulus.get_mpz_t(), pz.get_mpz_t());
    const std::uint64_t mi = minv.get_ui();
    for (std::size_t idx = 0; idx < residues.size(); ++idx) {
      std::uint64_t old = mpz_fdiv_ui(residues[idx].get_mpz_t(), p);
      std::uint64_t h = (e.coeffs.data()[idx] + p - old) % p * mi % p;
      residues[idx] += modulus * static_cast<unsigned long>(h);
    }
    modulus *= p;
    ++primes_in_use;
    changed = true;
  }

  CertifiedRank fb = detail::bareiss_certified(to_rational(a), want_kernel);
  fb.used_fallback = true;
  fb.primes_used = kMaxPrimes;
  return fb;
}

}  // namespace bincayley::exactla
