#include "bincayley/rsk.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "bincayley/error.hpp"

namespace bincayley::rsk {

partitions::Partition Tableau::shape() const {
  std::vector<int> parts;
  for (const auto& r : rows) parts.push_back(static_cast<int>(r.size()));
  return partitions::Partition(std::move(parts));
}

bool Tableau::is_standard() const {
  std::vector<int> all;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].empty() || (i > 0 && rows[i].size() > rows[i - 1].size())) return false;
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      if (j > 0 && rows[i][j] <= rows[i][j - 1]) return false;
      if (i > 0 && rows[i][j] <= rows[i - 1][j]) return false;
      all.push_back(rows[i][j]);
    }
  }
  std::sort(all.begin(), all.end());
  for (std::size_t i = 0; i < all.size(); ++i)
    if (all[i] != static_cast<int>(i) + 1) return false;
  return true;
}

namespace {

void require_permutation(const std::vector<int>& perm) {
  std::vector<bool> seen(perm.size() + 1, false);
  for (int v : perm) {
    require(v >= 1 && v <= static_cast<int>(perm.size()) && !seen[v],
            "expected a permutation of 1..m in one-line notation");
    seen[v] = true;
  }
}

}  // namespace

RskPair rsk(const std::vector<int>& perm) {
  require_permutation(perm);
  RskPair out;
  auto& p = out.insertion.rows;
  auto& q = out.recording.rows;
  for (std::size_t step = 0; step < perm.size(); ++step) {
    int x = perm[step];
    std::size_t row = 0;
    while (true) {
      if (row == p.size()) {
        p.push_back({x});
        q.push_back({static_cast<int>(step) + 1});
        break;
      }
      auto it = std::upper_bound(p[row].begin(), p[row].end(), x);
      if (it == p[row].end()) {
        p[row].push_back(x);
        q[row].push_back(static_cast<int>(step) + 1);
        break;
      }
      std::swap(x, *it);  // bump into the next row
      ++row;
    }
  }
  return out;
}

int lis(const std::vector<int>& perm) {
  std::vector<int> tops;
  for (int v : perm) {
    auto it = std::lower_bound(tops.begin(), tops.end(), v);
    if (it == tops.end()) tops.push_back(v);
    else *it = v;
  }
  return static_cast<int>(tops.size());
}

std::vector<std::uint64_t> lis_distribution(int m) {
  require(m >= 0, "m must be nonnegative");
  if (m > kMaxEnumeration)
    throw SizeLimitExceeded("lis enumeration supports m <= " + std::to_string(kMaxEnumeration));
  thread_local std::map<int, std::vector<std::uint64_t>> cache;
  if (auto it = cache.find(m); it != cache.end()) return it->second;
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(m) + 1, 0);
  std::vector<int> perm(static_cast<std::size_t>(m));
  std::iota(perm.begin(), perm.end(), 1);
  do {
    ++counts[static_cast<std::size_t>(lis(perm))];
  } while (std::next_permutation(perm.begin(), perm.end()));
  cache.emplace(m, counts);
  return counts;
}

std::uint64_t count_by_lis(int m, int t) {
  auto d = lis_distribution(m);
  if (t < 0 || t > m) return 0;
  return d[static_cast<std::size_t>(t)];
}

}  // namespace bincayley::rsk
