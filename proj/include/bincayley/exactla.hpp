#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "bincayley/matrix.hpp"
#include "bincayley/rational.hpp"

namespace bincayley::exactla {

struct RankNullity {
  std::size_t rank = 0;
  std::size_t nullity = 0;  // dimension of the right kernel
  friend bool operator==(const RankNullity&, const RankNullity&) = default;
};

using Vector = std::vector<Rat>;

// Exact rank over Q. Small matrices use fraction-free elimination; large
// integer matrices use certified modular elimination (see modular.hpp).
RankNullity rank_nullity(const RatMatrix& m);
RankNullity rank_nullity(const IntMatrix& m);

// Right-kernel basis; each vector is scaled so its first nonzero entry is 1.
std::vector<Vector> kernel_basis(const RatMatrix& m);
std::vector<Vector> kernel_basis(const IntMatrix& m);

Rat determinant(const RatMatrix& m);

// Some x with a * x = b, or nullopt when the system is inconsistent.
std::optional<Vector> solve(const RatMatrix& a, std::span<const Rat> b);

// Reference route: fraction-free (Bareiss) elimination only.
namespace bareiss {
RankNullity rank_nullity(const RatMatrix& m);
std::vector<Vector> kernel_basis(const RatMatrix& m);
}  // namespace bareiss

void normalize_leading_one(Vector& v);

}  // namespace bincayley::exactla
