// Compiled with -mavx2; only reached after a runtime CPU check.
#include <immintrin.h>

#include "bincayley/simd/kernels.hpp"

namespace bincayley::simd {

const KernelTable& avx2_table();

namespace {

inline std::uint32_t mul_shoup(std::uint32_t x, MulConst f, std::uint32_t p) {
  std::uint32_t q = static_cast<std::uint32_t>((static_cast<std::uint64_t>(f.shoup) * x) >> 32);
  std::uint32_t r = f.value * x - q * p;
  return r >= p ? r - p : r;
}

// High 32 bits of the unsigned 32x32 products x[i] * w.
inline __m256i mulhi_epu32(__m256i x, __m256i w) {
  __m256i even = _mm256_srli_epi64(_mm256_mul_epu32(x, w), 32);
  __m256i odd = _mm256_mul_epu32(_mm256_srli_epi64(x, 32), w);
  return _mm256_blend_epi32(even, odd, 0xAA);
}

// x mod p for x in [0, 2p): unsigned min picks x - p unless it wrapped.
inline __m256i reduce_once(__m256i x, __m256i p) {
  return _mm256_min_epu32(x, _mm256_sub_epi32(x, p));
}

inline __m256i mul_shoup8(__m256i x, __m256i f, __m256i fs, __m256i p) {
  __m256i q = mulhi_epu32(x, fs);
  __m256i r = _mm256_sub_epi32(_mm256_mullo_epi32(x, f), _mm256_mullo_epi32(q, p));
  return reduce_once(r, p);
}

void axpy_mod_avx2(std::uint32_t* dst, const std::uint32_t* src, MulConst f, std::size_t len,
                   std::uint32_t p) {
  const __m256i vf = _mm256_set1_epi32(static_cast<int>(f.value));
  const __m256i vfs = _mm256_set1_epi32(static_cast<int>(f.shoup));
  const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
  std::size_t i = 0;
  for (; i + 8 <= len; i += 8) {
    __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    d = reduce_once(_mm256_add_epi32(d, mul_shoup8(s, vf, vfs, vp)), vp);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), d);
  }
  for (; i < len; ++i) {
    std::uint32_t s = dst[i] + mul_shoup(src[i], f, p);
    dst[i] = s >= p ? s - p : s;
  }
}

void scale_mod_avx2(std::uint32_t* dst, MulConst f, std::size_t len, std::uint32_t p) {
  const __m256i vf = _mm256_set1_epi32(static_cast<int>(f.value));
  const __m256i vfs = _mm256_set1_epi32(static_cast<int>(f.shoup));
  const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
  std::size_t i = 0;
  for (; i + 8 <= len; i += 8) {
    __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), mul_shoup8(d, vf, vfs, vp));
  }
  for (; i < len; ++i) dst[i] = mul_shoup(dst[i], f, p);
}

std::int64_t dot_i32_avx2(const std::int32_t* a, const std::int32_t* b, std::size_t len) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 8 <= len; i += 8) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    acc = _mm256_add_epi64(acc, _mm256_mul_epi32(va, vb));
    acc = _mm256_add_epi64(acc, _mm256_mul_epi32(_mm256_srli_epi64(va, 32), _mm256_srli_epi64(vb, 32)));
  }
  alignas(32) std::int64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  std::int64_t s = lanes[0] + lanes[1] + lanes[2] + lanes[3];
  for (; i < len; ++i) s += static_cast<std::int64_t>(a[i]) * b[i];
  return s;
}

}  // namespace

const KernelTable& avx2_table() {
  static const KernelTable table{"avx2", axpy_mod_avx2, scale_mod_avx2, dot_i32_avx2};
  return table;
}

}  // namespace bincayley::simd
