#include <gtest/gtest.h>

#include "bincayley/error.hpp"
#include "bincayley/lp.hpp"
#include "test_support.hpp"

namespace bincayley::exactla {
namespace {

using testing::rat_matrix;
using testing::rats;

PolytopeQuery box(int lo, int hi) {
  // lo <= c <= hi
  return {rat_matrix({{1}, {-1}}), rats({-lo, hi})};
}

TEST(Feasibility, IntervalIsFeasible) {
  const auto q = box(-2, 3);
  const auto f = lp_feasible(q);
  ASSERT_TRUE(f.feasible);
  EXPECT_TRUE(check_witness(q, f.witness));
}

TEST(Feasibility, EmptyIntervalGivesCertificate) {
  const auto q = box(3, 1);
  const auto f = lp_feasible(q);
  ASSERT_FALSE(f.feasible);
  EXPECT_TRUE(check_farkas(q, f.farkas));
}

TEST(Feasibility, ShiftedSimplexNeedsNegativeCoordinates) {
  // c1 <= -1, c2 <= -1, c1 + c2 >= -3
  const PolytopeQuery q{rat_matrix({{-1, 0}, {0, -1}, {1, 1}}), rats({-1, -1, 3})};
  const auto f = lp_feasible(q);
  ASSERT_TRUE(f.feasible);
  EXPECT_TRUE(check_witness(q, f.witness));
  EXPECT_EQ(polytope_dimension(q), 2u);
}

TEST(Feasibility, NoConstraintsOrNoVariables) {
  const PolytopeQuery free_space{RatMatrix(0, 3), {}};
  EXPECT_TRUE(lp_feasible(free_space).feasible);
  EXPECT_EQ(polytope_dimension(free_space), 3u);
  const PolytopeQuery point_ok{RatMatrix(2, 0), rats({0, 1})};
  EXPECT_TRUE(lp_feasible(point_ok).feasible);
  EXPECT_EQ(polytope_dimension(point_ok), 0u);
  const PolytopeQuery point_bad{RatMatrix(1, 0), rats({-1})};
  const auto f = lp_feasible(point_bad);
  EXPECT_FALSE(f.feasible);
  EXPECT_TRUE(check_farkas(point_bad, f.farkas));
  EXPECT_THROW(polytope_dimension(point_bad), EmptyPolytope);
}

TEST(Maximize, BoundedAndUnbounded) {
  const auto q = box(-2, 3);
  const auto up = lp_maximize(q, rats({1}));
  ASSERT_EQ(up.status, Optimum::Status::Optimal);
  EXPECT_EQ(up.value, 3);
  const auto down = lp_maximize(q, rats({-1}));
  EXPECT_EQ(down.value, 2);
  const PolytopeQuery half{rat_matrix({{1}}), rats({0})};
  EXPECT_EQ(lp_maximize(half, rats({1})).status, Optimum::Status::Unbounded);
  EXPECT_EQ(lp_maximize(box(3, 1), rats({1})).status, Optimum::Status::Infeasible);
}

TEST(Dimension, ImplicitEqualitiesLowerTheDimension) {
  // c1 + c2 >= 0 and -(c1 + c2) >= 0 pin a line; 0 <= c1 <= 1 bounds it.
  const PolytopeQuery q{rat_matrix({{1, 1}, {-1, -1}, {1, 0}, {-1, 0}}), rats({0, 0, 0, 1})};
  EXPECT_EQ(polytope_dimension(q), 1u);
  const PolytopeQuery pt{rat_matrix({{1, 0}, {-1, 0}, {0, 1}, {0, -1}}), rats({0, 0, 2, -2})};
  EXPECT_EQ(polytope_dimension(pt), 0u);
}

TEST(Dimension, DegenerateVertexWithManyTightConstraints) {
  // Square pyramid apex: several constraints tight at the same point.
  const PolytopeQuery q{rat_matrix({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}, {-1, 0, 0}}),
                        rats({0, 0, 0, 1, 0})};
  EXPECT_EQ(polytope_dimension(q), 2u);
}

TEST(Validate, ShapeMismatchIsRejected) {
  const PolytopeQuery bad{RatMatrix(2, 1), rats({1})};
  EXPECT_THROW(lp_feasible(bad), InvalidArgument);
}

}  // namespace
}  // namespace bincayley::exactla
