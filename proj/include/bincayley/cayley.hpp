#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "bincayley/groups.hpp"
#include "bincayley/matrix.hpp"

namespace bincayley::cayley {

using groups::GroupElement;
using groups::GroupSpec;

// Dense adjacency matrices are refused above this order.
inline constexpr std::uint64_t kMaxDenseOrder = 5040;

// A natural-valued class function that is invariant under inversion.
class WeightFunction {
 public:
  // class_values follows groups::conjugacy_classes(g).
  WeightFunction(GroupSpec g, std::vector<std::uint64_t> class_values);

  const GroupSpec& group() const { return group_; }
  const std::vector<groups::ConjugacyClass>& classes() const { return classes_; }
  const std::vector<std::uint64_t>& class_values() const { return values_; }

  std::uint64_t operator()(const GroupElement& x) const;

 private:
  GroupSpec group_;
  std::vector<groups::ConjugacyClass> classes_;
  std::vector<std::uint64_t> values_;
};

// Fixed points on Sym(m), zero coordinates on CyclicPower(m,n).
WeightFunction natural_weight(const GroupSpec& g);

// x -> C(w(x), k).
WeightFunction binomial_transform(const WeightFunction& w, int k);

// Entry (g, h) = w(h * g^-1), rows and columns in canonical element order.
IntMatrix adjacency_matrix(const WeightFunction& w);

// Common row sum, sum_g w(g).
std::uint64_t weighted_degree(const WeightFunction& w);

// Text format:
//   # comment
//   group = sym 3            (or: group = cyclic 4 1)
//   2,1 = 5                  (Sym: cycle type; CyclicPower: element "1|0|1")
// Every class must be listed exactly once.
WeightFunction parse_weight_file(std::string_view text);
std::string format_weight_file(const WeightFunction& w);

}  // namespace bincayley::cayley
