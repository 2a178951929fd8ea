#pragma once

#include <cstdint>
#include <vector>

#include "bincayley/partitions.hpp"

namespace bincayley::rsk {

// Largest m for which count_by_lis enumerates S_m.
inline constexpr int kMaxEnumeration = 8;

struct Tableau {
  std::vector<std::vector<int>> rows;
  partitions::Partition shape() const;
  bool is_standard() const;  // rows and columns increase, entries 1..n once each
  friend bool operator==(const Tableau&, const Tableau&) = default;
};

struct RskPair {
  Tableau insertion;  // P
  Tableau recording;  // Q
};

// Row insertion of a permutation given in one-line notation (values 1..m).
RskPair rsk(const std::vector<int>& perm);

// Length of the longest increasing subsequence (patience sorting).
int lis(const std::vector<int>& perm);

// Number of sigma in S_m with lis(sigma) == t, by enumeration.
std::uint64_t count_by_lis(int m, int t);
// Entry t holds the count for lis == t, t = 0..m.
std::vector<std::uint64_t> lis_distribution(int m);

}  // namespace bincayley::rsk
