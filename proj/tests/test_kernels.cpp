#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "bincayley/exactla.hpp"
#include "bincayley/simd/kernels.hpp"
#include "test_support.hpp"

namespace bincayley::simd {
namespace {

std::vector<std::uint32_t> residues(std::size_t n, std::uint32_t p, std::mt19937_64& gen) {
  std::vector<std::uint32_t> v(n);
  for (auto& x : v) x = static_cast<std::uint32_t>(gen() % p);
  return v;
}

TEST(Kernels, ScalarReferenceIsCorrect) {
  const std::uint32_t p = 2147483647u;
  std::mt19937_64 gen(1);
  auto dst = residues(37, p, gen), src = residues(37, p, gen), want = dst;
  const std::uint32_t f = 123456789u;
  for (std::size_t i = 0; i < want.size(); ++i)
    want[i] = static_cast<std::uint32_t>((want[i] + static_cast<std::uint64_t>(f) * src[i]) % p);
  scalar_kernels().axpy_mod(dst.data(), src.data(), make_mul_const(f, p), dst.size(), p);
  EXPECT_EQ(dst, want);
  std::vector<std::int32_t> a{1, -2, 3}, b{4, 5, -6};
  EXPECT_EQ(scalar_kernels().dot_i32(a.data(), b.data(), 3), 4 - 10 - 18);
}

class VectorKernels : public ::testing::Test {
 protected:
  void SetUp() override {
    if (avx2_kernels() == nullptr) GTEST_SKIP() << "AVX2 kernels unavailable on this build or CPU";
  }
};

TEST_F(VectorKernels, AxpyAndScaleMatchScalarBitForBit) {
  std::mt19937_64 gen(42);
  for (std::uint32_t p : {2147483647u, 2147483629u, 65537u, 3u, 2u}) {
    for (std::size_t len : {0u, 1u, 7u, 8u, 9u, 31u, 64u, 1000u}) {
      const auto src = residues(len, p, gen), base = residues(len, p, gen);
      for (std::uint32_t f : {0u, 1u, p - 1, static_cast<std::uint32_t>(gen() % p)}) {
        const MulConst c = make_mul_const(f, p);
        auto s = base, v = base;
        scalar_kernels().axpy_mod(s.data(), src.data(), c, len, p);
        avx2_kernels()->axpy_mod(v.data(), src.data(), c, len, p);
        ASSERT_EQ(s, v) << "axpy p=" << p << " len=" << len << " f=" << f;
        s = base, v = base;
        scalar_kernels().scale_mod(s.data(), c, len, p);
        avx2_kernels()->scale_mod(v.data(), c, len, p);
        ASSERT_EQ(s, v) << "scale p=" << p << " len=" << len << " f=" << f;
      }
    }
  }
}

TEST_F(VectorKernels, DotMatchesScalar) {
  std::mt19937_64 gen(3);
  std::uniform_int_distribution<std::int32_t> d(INT32_MIN, INT32_MAX);
  for (std::size_t len : {0u, 1u, 5u, 8u, 13u, 100u, 257u}) {
    std::vector<std::int32_t> a(len), b(len);
    for (std::size_t i = 0; i < len; ++i) {
      a[i] = d(gen);
      b[i] = d(gen) >> 24;
    }
    EXPECT_EQ(scalar_kernels().dot_i32(a.data(), b.data(), len), avx2_kernels()->dot_i32(a.data(), b.data(), len));
  }
}

TEST_F(VectorKernels, RankIsIndependentOfTheKernelTable) {
  std::mt19937_64 gen(8);
  const auto a = testing::random_rank(120, 110, 77, 3, gen);
  const KernelTable& before = active_kernels();
  set_active_kernels(scalar_kernels());
  const auto scalar = exactla::kernel_basis(a);
  set_active_kernels(*avx2_kernels());
  const auto vector = exactla::kernel_basis(a);
  set_active_kernels(before);
  EXPECT_EQ(scalar.size(), 33u);
  EXPECT_EQ(scalar, vector);
}

}  // namespace
}  // namespace bincayley::simd
