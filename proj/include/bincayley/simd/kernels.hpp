#pragma once

// Data-parallel inner loops of the exact linear algebra: modular row updates
// for elimination over F_p and int32 dot products for exact certification.
// Every kernel has a portable scalar reference; vector variants are chosen at
// runtime and must agree with the reference bit for bit.

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace bincayley::simd {

// Largest modulus the modular kernels accept (exclusive).
inline constexpr std::uint32_t kMaxModulus = 1u << 31;

// Precomputed operand for Shoup multiplication by a fixed factor modulo p.
struct MulConst {
  std::uint32_t value;  // factor, < p
  std::uint32_t shoup;  // floor(factor * 2^32 / p)
};

MulConst make_mul_const(std::uint32_t factor, std::uint32_t p);

struct KernelTable {
  std::string_view name;
  // dst[i] = (dst[i] + f * src[i]) mod p, with all inputs already reduced.
  void (*axpy_mod)(std::uint32_t* dst, const std::uint32_t* src, MulConst f, std::size_t len,
                   std::uint32_t p);
  // dst[i] = (f * dst[i]) mod p.
  void (*scale_mod)(std::uint32_t* dst, MulConst f, std::size_t len, std::uint32_t p);
  // Sum of a[i] * b[i]; the caller guarantees the exact sum fits in int64.
  std::int64_t (*dot_i32)(const std::int32_t* a, const std::int32_t* b, std::size_t len);
};

const KernelTable& scalar_kernels();
// nullptr when the build or the CPU lacks AVX2.
const KernelTable* avx2_kernels();

// The table used by the library. Defaults to the widest supported variant;
// setting BINCAYLEY_KERNELS=scalar in the environment forces the reference.
const KernelTable& active_kernels();
void set_active_kernels(const KernelTable& table);

}  // namespace bincayley::simd
