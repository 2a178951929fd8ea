#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "bincayley/error.hpp"
#include "bincayley/partitions.hpp"

namespace bincayley::partitions {
namespace {

Partition P(std::vector<int> v) { return Partition(std::move(v)); }

TEST(Partition, ParseAndPrint) {
  EXPECT_EQ(Partition::parse("3,1,1").parts(), (std::vector<int>{3, 1, 1}));
  EXPECT_EQ(P({2, 2, 1}).to_string(), "2,2,1");
  EXPECT_EQ(P({}).to_string(), "");
  EXPECT_THROW(Partition::parse("1,2"), InvalidArgument);
  EXPECT_THROW(Partition::parse("2,0,x"), InvalidArgument);
}

TEST(Enumerate, CountsAndOrder) {
  const std::vector<std::size_t> counts{1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (int m = 0; m <= 10; ++m) EXPECT_EQ(enumerate_partitions(m).size(), counts[m]) << m;
  EXPECT_EQ(enumerate_partitions(20).size(), 627u);
  const auto p4 = enumerate_partitions(4);
  EXPECT_EQ(p4.front(), P({4}));
  EXPECT_EQ(p4[1], P({3, 1}));
  EXPECT_EQ(p4.back(), P({1, 1, 1, 1}));
  EXPECT_TRUE(std::is_sorted(p4.begin(), p4.end(), std::greater<>()));
  EXPECT_THROW(enumerate_partitions(21), SizeLimitExceeded);
}

TEST(Conjugate, Involution) {
  EXPECT_EQ(conjugate(P({3, 1})), P({2, 1, 1}));
  for (const auto& mu : enumerate_partitions(8)) EXPECT_EQ(conjugate(conjugate(mu)), mu);
}

TEST(RimHooks, ExampleShape) {
  const Partition mu = P({5, 4, 2});
  const auto five = rim_hooks(mu, 5);
  ASSERT_EQ(five.size(), 1u);
  EXPECT_EQ(five[0].height, 1);
  const auto four = rim_hooks(mu, 4);
  ASSERT_EQ(four.size(), 2u);
  for (const auto& h : four) EXPECT_EQ(h.height, 1);
  EXPECT_EQ(rim_hooks(mu, 1).size(), 3u);
  for (int len = 1; len <= 11; ++len)
    for (const auto& h : rim_hooks(mu, len)) {
      EXPECT_EQ(static_cast<int>(h.cells.size()), len);
      EXPECT_EQ(h.remainder.weight(), mu.weight() - len);
    }
}

TEST(Character, SmallTables) {
  // S_3: rows (3), (2,1), (1,1,1) on classes (3), (2,1), (1,1,1).
  EXPECT_EQ(mn_character(P({2, 1}), P({1, 1, 1})), 2);
  EXPECT_EQ(mn_character(P({2, 1}), P({2, 1})), 0);
  EXPECT_EQ(mn_character(P({2, 1}), P({3})), -1);
  EXPECT_EQ(mn_character(P({1, 1, 1}), P({2, 1})), -1);
  // S_5 values from the standard table.
  EXPECT_EQ(mn_character(P({3, 1, 1}), P({1, 1, 1, 1, 1})), 6);
  EXPECT_EQ(mn_character(P({3, 1, 1}), P({5})), 1);
  EXPECT_EQ(mn_character(P({3, 2}), P({2, 2, 1})), 1);
  EXPECT_EQ(mn_character(P({2, 2, 1}), P({3, 1, 1})), -1);
  EXPECT_EQ(mn_character(P({4, 1}), P({4, 1})), 0);
}

TEST(Character, SignCharacterAndConjugation) {
  for (int m = 1; m <= 7; ++m)
    for (const auto& rho : enumerate_partitions(m)) {
      const int sign = (m - rho.length()) % 2 == 0 ? 1 : -1;
      EXPECT_EQ(mn_character(P(std::vector<int>(m, 1)), rho), sign);
      for (const auto& mu : enumerate_partitions(m))
        EXPECT_EQ(mn_character(conjugate(mu), rho), sign * mn_character(mu, rho));
    }
}

TEST(Crop, FrozenValues) {
  const Partition mu = P({2, 2, 1});
  const std::vector<std::uint64_t> want{0, 0, 0, 2, 5, 5};
  for (int k = 0; k <= 5; ++k) EXPECT_EQ(crop(mu, k), want[k]) << k;
  EXPECT_EQ(crop(P({3}), 0), 1u);
  EXPECT_EQ(crop(P({2, 1}), 0), 0u);
  EXPECT_EQ(crop(P({2, 1}), 1), 1u);
}

TEST(SytCount, HookLengthFormulaAgrees) {
  for (int m = 0; m <= 14; ++m) {
    std::uint64_t squares = 0, fact = 1;
    for (int i = 2; i <= m; ++i) fact *= i;
    for (const auto& mu : enumerate_partitions(m)) {
      EXPECT_EQ(syt_count(mu), hook_length_count(mu)) << mu.to_string();
      squares += syt_count(mu) * syt_count(mu);
    }
    EXPECT_EQ(squares, fact) << m;
  }
  EXPECT_EQ(hook_length_count(P({5, 4, 2})), 990u);
}

TEST(ClassSize, SumsToFactorial) {
  for (int m = 1; m <= 10; ++m) {
    std::uint64_t total = 0, fact = 1;
    for (int i = 2; i <= m; ++i) fact *= i;
    for (const auto& rho : enumerate_partitions(m)) total += class_size(rho);
    EXPECT_EQ(total, fact);
  }
  EXPECT_EQ(class_size(P({2, 2})), 3u);
  EXPECT_EQ(class_size(P({3, 1})), 8u);
}

TEST(RemoveCorner, Counts) {
  EXPECT_EQ(remove_corner(P({5, 4, 2})).size(), 3u);
  EXPECT_EQ(remove_corner(P({1})).front(), P({}));
}

}  // namespace
}  // namespace bincayley::partitions
