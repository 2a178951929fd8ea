#include "bincayley/simd/kernels.hpp"

namespace bincayley::simd {

MulConst make_mul_const(std::uint32_t factor, std::uint32_t p) {
  return {factor, static_cast<std::uint32_t>((static_cast<std::uint64_t>(factor) << 32) / p)};
}

namespace {

inline std::uint32_t mul_shoup(std::uint32_t x, MulConst f, std::uint32_t p) {
  std::uint32_t q = static_cast<std::uint32_t>((static_cast<std::uint64_t>(f.shoup) * x) >> 32);
  std::uint32_t r = f.value * x - q * p;  // in [0, 2p)
  return r >= p ? r - p : r;
}

void axpy_mod_scalar(std::uint32_t* dst, const std::uint32_t* src, MulConst f, std::size_t len,
                     std::uint32_t p) {
  for (std::size_t i = 0; i < len; ++i) {
    std::uint32_t s = dst[i] + mul_shoup(src[i], f, p);
    dst[i] = s >= p ? s - p : s;
  }
}

void scale_mod_scalar(std::uint32_t* dst, MulConst f, std::size_t len, std::uint32_t p) {
  for (std::size_t i = 0; i < len; ++i) dst[i] = mul_shoup(dst[i], f, p);
}

std::int64_t dot_i32_scalar(const std::int32_t* a, const std::int32_t* b, std::size_t len) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < len; ++i) s += static_cast<std::int64_t>(a[i]) * b[i];
  return s;
}

}  // namespace

const KernelTable& scalar_kernels() {
  static const KernelTable table{"scalar", axpy_mod_scalar, scale_mod_scalar, dot_i32_scalar};
  return table;
}

}  // namespace bincayley::simd
