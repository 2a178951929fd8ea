#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bincayley::partitions {

// Largest m the partition routines accept; keeps factorials inside 64 bits.
inline constexpr int kMaxWeight = 20;

// Integer partition, stored as non-increasing positive parts.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);  // trailing zeros are dropped

  const std::vector<int>& parts() const { return parts_; }
  int weight() const { return weight_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int part(int i) const { return i < length() ? parts_[i] : 0; }  // 0-based row

  std::string to_string() const;  // "2,1"; the empty partition is ""
  static Partition parse(std::string_view text);

  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }
  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

// All partitions of m, largest first in lexicographic order: (m), (m-1,1), ...
std::vector<Partition> enumerate_partitions(int m);

Partition conjugate(const Partition& mu);

struct RimHook {
  std::vector<std::pair<int, int>> cells;  // (row, column), 0-based
  int length = 0;
  int height = 0;  // rows spanned minus one
  Partition remainder;
};

// Rim hooks of the given length, ordered by their top row.
std::vector<RimHook> rim_hooks(const Partition& mu, int length);

// Partitions reachable by deleting one corner cell.
std::vector<Partition> remove_corner(const Partition& mu);

// Irreducible character chi^mu on the class with cycle type rho, by the
// Murnaghan-Nakayama rule (memoised per thread).
std::int64_t mn_character(const Partition& mu, const Partition& rho);

// Number of ways to delete k cells one corner at a time so that the result is
// the one-row shape (|mu| - k).
std::uint64_t crop(const Partition& mu, int k);

std::uint64_t syt_count(const Partition& mu);

// |mu|! / prod(hook lengths); independent route to syt_count.
std::uint64_t hook_length_count(const Partition& mu);

// Number of permutations with cycle type rho.
std::uint64_t class_size(const Partition& rho);

}  // namespace bincayley::partitions
