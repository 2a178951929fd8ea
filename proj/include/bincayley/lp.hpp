#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "bincayley/matrix.hpp"
#include "bincayley/rational.hpp"

namespace bincayley::exactla {

// The polytope { c : normals * c + offsets >= 0 } with c unrestricted in sign.
struct PolytopeQuery {
  RatMatrix normals;
  std::vector<Rat> offsets;
  void validate() const;
};

struct Feasibility {
  bool feasible = false;
  std::vector<Rat> witness;  // a point of the polytope when feasible
  // When infeasible: y >= 0 with y^T normals == 0 and y^T offsets < 0.
  std::vector<Rat> farkas;
};

// Two-phase simplex on exact rationals, Bland's rule; the returned witness or
// certificate is re-checked before it is handed out.
Feasibility lp_feasible(const PolytopeQuery& q);

bool check_witness(const PolytopeQuery& q, std::span<const Rat> c);
bool check_farkas(const PolytopeQuery& q, std::span<const Rat> y);

struct Optimum {
  enum class Status { Optimal, Unbounded, Infeasible };
  Status status = Status::Infeasible;
  Rat value;
  std::vector<Rat> point;
};

Optimum lp_maximize(const PolytopeQuery& q, std::span<const Rat> objective);

// Affine dimension; throws EmptyPolytope when infeasible.
std::size_t polytope_dimension(const PolytopeQuery& q);

}  // namespace bincayley::exactla
