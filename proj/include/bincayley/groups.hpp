#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "bincayley/cyclotomic.hpp"
#include "bincayley/partitions.hpp"

namespace bincayley::groups {

using partitions::Partition;

// Element enumeration refuses groups larger than this.
inline constexpr std::uint64_t kMaxGroupOrder = 50000;

struct Symmetric {
  int m = 0;
};

// (Z_m)^n
struct CyclicPower {
  int m = 0;
  int n = 0;
};

using GroupSpec = std::variant<Symmetric, CyclicPower>;

void validate(const GroupSpec& g);
std::uint64_t order(const GroupSpec& g);
std::string describe(const GroupSpec& g);  // "Sym(3)", "CyclicPower(4,1)"

// Sym: one-line notation with values 1..m. CyclicPower: coordinates in 0..m-1.
struct GroupElement {
  std::vector<int> entries;
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

GroupElement identity(const GroupSpec& g);
// Product a*b; for permutations (a*b)(i) = a(b(i)).
GroupElement compose(const GroupSpec& g, const GroupElement& a, const GroupElement& b);
GroupElement inverse(const GroupSpec& g, const GroupElement& a);
bool is_element(const GroupSpec& g, const GroupElement& a);

// Canonical order: lexicographic one-line order for Sym, lexicographic with
// the leftmost coordinate most significant for CyclicPower.
std::vector<GroupElement> elements(const GroupSpec& g);
std::size_t element_index(const GroupSpec& g, const GroupElement& a);

std::string element_label(const GroupSpec& g, const GroupElement& a);  // "3,1,2" / "1|0|1"
GroupElement parse_element(const GroupSpec& g, std::string_view text);

Partition cycle_type(const GroupElement& perm);
int fixed_points(const GroupElement& perm);
int zero_count(const GroupElement& x);

struct ConjugacyClass {
  std::string label;       // cycle type "2,1" for Sym, element "1|0" for CyclicPower
  Partition cycle_type;    // Sym only
  GroupElement representative;
  std::uint64_t size = 0;
};

// Sym: one class per partition in enumerate_partitions order.
// CyclicPower: one singleton class per element in canonical order.
std::vector<ConjugacyClass> conjugacy_classes(const GroupSpec& g);
std::size_t class_index(const GroupSpec& g, const GroupElement& a);
std::size_t class_index_of_label(const GroupSpec& g, std::string_view label);

// Irreducible characters: partitions of m for Sym; for CyclicPower the
// character chi^y(x) = z^{y.x} is labelled by the element y.
using CharacterLabel = std::variant<Partition, GroupElement>;
std::vector<CharacterLabel> irreducible_labels(const GroupSpec& g);
std::string character_label_string(const GroupSpec& g, const CharacterLabel& label);

using CharacterValue = std::variant<std::int64_t, CyclotomicValue>;
CharacterValue character_value(const GroupSpec& g, const CharacterLabel& label, const ConjugacyClass& cls);

// z^{y.x} with z a primitive m-th root of unity.
CyclotomicValue cyclic_character(int m, const GroupElement& y, const GroupElement& x);
std::int64_t dot_mod(int m, const GroupElement& y, const GroupElement& x);

}  // namespace bincayley::groups
