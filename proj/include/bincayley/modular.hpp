#pragma once

// Certified exact rank of integer matrices through elimination modulo primes.
//
// rank mod p never exceeds the rank over Q, so one prime gives a proven lower
// bound. The upper bound comes from expressing every non-pivot column as a
// rational combination of the pivot columns (reconstructed from residues,
// CRT-combined over several primes when needed) and checking that identity
// exactly over Z.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "bincayley/matrix.hpp"
#include "bincayley/rational.hpp"

namespace bincayley::exactla {

using ModMatrix = Matrix<std::uint32_t>;

// Primes below 2^31, largest first.
std::vector<std::uint32_t> elimination_primes(std::size_t count);
bool is_prime_u32(std::uint32_t n);

struct ModularEchelon {
  std::uint32_t prime = 0;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;
  // Coefficients expressing each free column through the pivot columns:
  // column free[j] == sum_i coeffs(i, j) * column pivot_cols[i]  (mod p).
  ModMatrix coeffs;
  std::vector<std::size_t> free_cols;
};

ModularEchelon echelon_mod_p(const IntMatrix& a, std::uint32_t p, bool want_coeffs);

struct CertifiedRank {
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;
  // Kernel vectors in free-column form (entry 1 at its free column), exact.
  std::vector<std::vector<Rat>> kernel;
  std::size_t primes_used = 0;
  bool used_fallback = false;
};

CertifiedRank certified_rank(const IntMatrix& a, bool want_kernel);

// Smallest |n|, d > 0 with n == d * r (mod modulus), |n|, d <= sqrt(modulus / 2).
bool rational_reconstruct(const Int& r, const Int& modulus, Rat& out);

}  // namespace bincayley::exactla
