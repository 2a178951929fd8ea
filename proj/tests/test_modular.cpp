#include <gtest/gtest.h>

#include <random>

#include "bincayley/exactla.hpp"
#include "bincayley/modular.hpp"
#include "test_support.hpp"

namespace bincayley::exactla {
namespace {

TEST(Primes, LargestBelowTwoToThe31) {
  const auto ps = elimination_primes(3);
  ASSERT_EQ(ps.size(), 3u);
  EXPECT_EQ(ps[0], 2147483647u);
  EXPECT_GT(ps[0], ps[1]);
  for (auto p : ps) EXPECT_TRUE(is_prime_u32(p));
  EXPECT_FALSE(is_prime_u32(2147483649u));
  EXPECT_FALSE(is_prime_u32(1));
  EXPECT_TRUE(is_prime_u32(2));
}

TEST(RationalReconstruct, RecoversSmallFractions) {
  const Int p = 2147483647;
  for (auto [n, d] : {std::pair{3, 7}, {-5, 12}, {0, 1}, {1, 1}, {-1000, 999}}) {
    Int dinv;
    mpz_invert(dinv.get_mpz_t(), Int(d).get_mpz_t(), p.get_mpz_t());
    Int r = (Int(n) * dinv) % p;
    if (r < 0) r += p;
    Rat out;
    ASSERT_TRUE(rational_reconstruct(r, p, out));
    EXPECT_EQ(out, Rat(n, d));
  }
}

TEST(Echelon, PivotsOfASmallMatrix) {
  IntMatrix a(2, 3);
  a(0, 0) = 1, a(0, 1) = 2, a(0, 2) = 3;
  a(1, 0) = 2, a(1, 1) = 4, a(1, 2) = 7;
  const auto e = echelon_mod_p(a, 101, true);
  EXPECT_EQ(e.rank, 2u);
  EXPECT_EQ(e.pivot_cols, (std::vector<std::size_t>{0, 2}));
  EXPECT_EQ(e.free_cols, (std::vector<std::size_t>{1}));
  EXPECT_EQ(e.coeffs(0, 0), 2u);
  EXPECT_EQ(e.coeffs(1, 0), 0u);
}

TEST(CertifiedRank, MatchesBareissOnRandomLowRankMatrices) {
  std::mt19937_64 gen(2024);
  for (int trial = 0; trial < 12; ++trial) {
    const std::size_t rows = 40 + gen() % 40, cols = 40 + gen() % 40;
    const std::size_t rank = gen() % std::min(rows, cols);
    const IntMatrix a = testing::random_rank(rows, cols, rank, 5, gen);
    const auto cert = certified_rank(a, true);
    EXPECT_EQ(cert.rank, rank);
    const auto ref = bareiss::rank_nullity(to_rational(a));
    EXPECT_EQ(cert.rank, ref.rank);
    ASSERT_EQ(cert.kernel.size(), cols - rank);
    const RatMatrix q = to_rational(a);
    for (const auto& v : cert.kernel)
      for (const Rat& x : multiply(q, v)) ASSERT_EQ(x, 0);
  }
}

TEST(CertifiedRank, LargeEntriesNeedSeveralPrimes) {
  std::mt19937_64 gen(9);
  IntMatrix a = testing::random_rank(30, 31, 29, 1000, gen);
  for (std::size_t i = 0; i < a.rows(); ++i) a(i, 0) *= 1000003;
  const auto cert = certified_rank(a, true);
  EXPECT_EQ(cert.rank, bareiss::rank_nullity(to_rational(a)).rank);
  EXPECT_EQ(kernel_basis(a), bareiss::kernel_basis(to_rational(a)));
}

TEST(CertifiedRank, FullRankAndZero) {
  IntMatrix id(60, 60);
  for (std::size_t i = 0; i < 60; ++i) id(i, i) = 3;
  EXPECT_EQ(certified_rank(id, true).rank, 60u);
  EXPECT_TRUE(certified_rank(id, true).kernel.empty());
  const auto z = certified_rank(IntMatrix(50, 55), true);
  EXPECT_EQ(z.rank, 0u);
  EXPECT_EQ(z.kernel.size(), 55u);
}

TEST(CertifiedRank, DefaultRouteUsesItAboveTheSmallSizeCutoff) {
  std::mt19937_64 gen(77);
  const IntMatrix a = testing::random_rank(100, 90, 61, 2, gen);
  const auto rn = rank_nullity(a);
  EXPECT_EQ(rn.rank, 61u);
  EXPECT_EQ(rn.nullity, 29u);
}

}  // namespace
}  // namespace bincayley::exactla
