#include "bincayley/partitions.hpp"

#include <algorithm>
#include <unordered_map>

#include "bincayley/error.hpp"
#include "bincayley/numeric.hpp"

namespace bincayley::partitions {

namespace {

std::string cache_key(const std::vector<int>& a, const std::vector<int>& b) {
  std::string key;
  key.reserve(a.size() + b.size() + 1);
  for (int v : a) key.push_back(static_cast<char>(v));
  key.push_back('\xff');
  for (int v : b) key.push_back(static_cast<char>(v));
  return key;
}

void check_weight(int m) {
  require(m >= 0, "partition weight must be nonnegative");
  if (m > kMaxWeight)
    throw SizeLimitExceeded("partition weight " + std::to_string(m) + " exceeds limit " +
                            std::to_string(kMaxWeight));
}

void enumerate_into(int remaining, int max_part, std::vector<int>& prefix, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    prefix.push_back(p);
    enumerate_into(remaining - p, p, prefix, out);
    prefix.pop_back();
  }
}

std::int64_t mn_rec(const Partition& mu, const std::vector<int>& rho, std::size_t start,
                    std::unordered_map<std::string, std::int64_t>& memo) {
  if (start == rho.size()) return mu.weight() == 0 ? 1 : 0;
  std::vector<int> rest(rho.begin() + static_cast<std::ptrdiff_t>(start), rho.end());
  std::string key = cache_key(mu.parts(), rest);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  std::int64_t total = 0;
  for (const RimHook& h : rim_hooks(mu, rho[start])) {
    std::int64_t v = mn_rec(h.remainder, rho, start + 1, memo);
    total += (h.height % 2 == 0) ? v : -v;
  }
  memo.emplace(std::move(key), total);
  return total;
}

std::uint64_t crop_rec(const Partition& mu, int k, std::unordered_map<std::string, std::uint64_t>& memo) {
  if (k == 0) return mu.length() <= 1 ? 1 : 0;
  // The target row must still fit inside the first row.
  if (mu.part(0) < mu.weight() - k) return 0;
  std::string key = cache_key(mu.parts(), {k});
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  std::uint64_t total = 0;
  for (const Partition& nu : remove_corner(mu)) total = checked_add(total, crop_rec(nu, k - 1, memo));
  memo.emplace(std::move(key), total);
  return total;
}

}  // namespace

Partition::Partition(std::vector<int> parts) {
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    require(parts[i] > 0, "partition parts must be positive");
    require(i == 0 || parts[i] <= parts[i - 1], "partition parts must be non-increasing");
    weight_ += parts[i];
  }
  parts_ = std::move(parts);
}

std::string Partition::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s;
}

Partition Partition::parse(std::string_view text) { return Partition(parse_int_list(text)); }

std::vector<Partition> enumerate_partitions(int m) {
  check_weight(m);
  std::vector<Partition> out;
  std::vector<int> prefix;
  enumerate_into(m, m, prefix, out);
  return out;
}

Partition conjugate(const Partition& mu) {
  std::vector<int> c(mu.part(0), 0);
  for (int p : mu.parts())
    for (int j = 0; j < p; ++j) ++c[j];
  return Partition(std::move(c));
}

std::vector<RimHook> rim_hooks(const Partition& mu, int length) {
  require(length >= 1, "rim hook length must be positive");
  const int l = mu.length();
  // First-column hook lengths (beta numbers): a hook of length d is a move of
  // one bead from b to b - d onto an empty position.
  std::vector<int> beta(l);
  for (int i = 0; i < l; ++i) beta[i] = mu.part(i) + (l - 1 - i);
  std::vector<RimHook> out;
  for (int i = 0; i < l; ++i) {
    const int target = beta[i] - length;
    if (target < 0 || std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    std::vector<int> nb = beta;
    nb[i] = target;
    std::sort(nb.rbegin(), nb.rend());
    std::vector<int> parts(l);
    for (int r = 0; r < l; ++r) parts[r] = nb[r] - (l - 1 - r);
    RimHook h;
    h.length = length;
    h.remainder = Partition(parts);
    int height = 0;
    for (int b : beta) height += b > target && b < beta[i];
    h.height = height;
    int top = l, bottom = -1;
    for (int r = 0; r < l; ++r)
      for (int c = h.remainder.part(r); c < mu.part(r); ++c) {
        h.cells.emplace_back(r, c);
        top = std::min(top, r);
        bottom = std::max(bottom, r);
      }
    ensure(static_cast<int>(h.cells.size()) == length && bottom - top == height,
           "rim hook bookkeeping disagrees with the bead move");
    out.push_back(std::move(h));
  }
  std::sort(out.begin(), out.end(), [](const RimHook& a, const RimHook& b) { return a.cells.front() < b.cells.front(); });
  return out;
}

std::vector<Partition> remove_corner(const Partition& mu) {
  std::vector<Partition> out;
  for (int i = 0; i < mu.length(); ++i) {
    if (mu.part(i) > mu.part(i + 1)) {
      std::vector<int> p = mu.parts();
      --p[i];
      out.emplace_back(std::move(p));
    }
  }
  return out;
}

std::int64_t mn_character(const Partition& mu, const Partition& rho) {
  check_weight(mu.weight());
  require(mu.weight() == rho.weight(), "character and class must have the same weight");
  thread_local std::unordered_map<std::string, std::int64_t> memo;
  // Removing the longest cycle first keeps the recursion shallow.
  return mn_rec(mu, rho.parts(), 0, memo);
}

std::uint64_t crop(const Partition& mu, int k) {
  check_weight(mu.weight());
  require(k >= 0 && k <= mu.weight(), "crop requires 0 <= k <= |mu|");
  thread_local std::unordered_map<std::string, std::uint64_t> memo;
  return crop_rec(mu, k, memo);
}

std::uint64_t syt_count(const Partition& mu) { return crop(mu, mu.weight()); }

std::uint64_t hook_length_count(const Partition& mu) {
  check_weight(mu.weight());
  const Partition c = conjugate(mu);
  std::uint64_t hooks = 1;
  for (int i = 0; i < mu.length(); ++i)
    for (int j = 0; j < mu.part(i); ++j)
      hooks = checked_mul(hooks, static_cast<std::uint64_t>(mu.part(i) - j + c.part(j) - i - 1));
  return factorial(static_cast<unsigned>(mu.weight())) / hooks;
}

std::uint64_t class_size(const Partition& rho) {
  check_weight(rho.weight());
  // m! / prod_i (i^{a_i} a_i!) with a_i the number of cycles of length i.
  std::uint64_t z = 1;
  const auto& p = rho.parts();
  for (std::size_t s = 0; s < p.size();) {
    std::size_t e = s;
    while (e < p.size() && p[e] == p[s]) ++e;
    const unsigned a = static_cast<unsigned>(e - s);
    z = checked_mul(z, checked_mul(checked_pow(static_cast<std::uint64_t>(p[s]), a), factorial(a)));
    s = e;
  }
  return factorial(static_cast<unsigned>(rho.weight())) / z;
}

}  // namespace bincayley::partitions
