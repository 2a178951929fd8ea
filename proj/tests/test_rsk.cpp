#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "bincayley/error.hpp"
#include "bincayley/rsk.hpp"

namespace bincayley::rsk {
namespace {

// Longest increasing subsequence by quadratic dynamic programming.
int lis_quadratic(const std::vector<int>& p) {
  std::vector<int> best(p.size(), 1);
  int out = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j)
      if (p[j] < p[i]) best[i] = std::max(best[i], best[j] + 1);
    out = std::max(out, best[i]);
  }
  return out;
}

TEST(Rsk, WorkedExample) {
  const auto pr = rsk({3, 1, 2});
  EXPECT_EQ(pr.insertion.rows, (std::vector<std::vector<int>>{{1, 2}, {3}}));
  EXPECT_EQ(pr.recording.rows, (std::vector<std::vector<int>>{{1, 3}, {2}}));
  EXPECT_EQ(lis({3, 1, 2}), 2);
  EXPECT_THROW(rsk({1, 1}), InvalidArgument);
}

TEST(Rsk, BijectionOnS6) {
  std::vector<int> perm(6);
  std::iota(perm.begin(), perm.end(), 1);
  std::set<std::pair<std::vector<std::vector<int>>, std::vector<std::vector<int>>>> seen;
  do {
    const auto pr = rsk(perm);
    ASSERT_TRUE(pr.insertion.is_standard());
    ASSERT_TRUE(pr.recording.is_standard());
    ASSERT_EQ(pr.insertion.shape(), pr.recording.shape());
    ASSERT_EQ(pr.insertion.shape().part(0), lis(perm));
    ASSERT_EQ(lis(perm), lis_quadratic(perm));
    // Inverse permutation swaps the tableaux.
    std::vector<int> inv(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) inv[perm[i] - 1] = static_cast<int>(i) + 1;
    ASSERT_EQ(rsk(inv).insertion, pr.recording);
    seen.emplace(pr.insertion.rows, pr.recording.rows);
  } while (std::next_permutation(perm.begin(), perm.end()));
  EXPECT_EQ(seen.size(), 720u);
}

TEST(LisCount, Distribution) {
  EXPECT_EQ(lis_distribution(4), (std::vector<std::uint64_t>{0, 1, 13, 9, 1}));
  EXPECT_EQ(count_by_lis(5, 2), 41u);
  std::uint64_t total = 0;
  for (auto c : lis_distribution(8)) total += c;
  EXPECT_EQ(total, 40320u);
  EXPECT_EQ(count_by_lis(3, 0), 0u);
  EXPECT_EQ(lis_distribution(0), (std::vector<std::uint64_t>{1}));
  EXPECT_THROW(lis_distribution(9), SizeLimitExceeded);
}

}  // namespace
}  // namespace bincayley::rsk
