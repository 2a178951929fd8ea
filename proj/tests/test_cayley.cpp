#include <gtest/gtest.h>

#include "bincayley/cayley.hpp"
#include "bincayley/error.hpp"
#include "bincayley/exactla.hpp"

namespace bincayley::cayley {
namespace {

TEST(Weights, NaturalWeights) {
  const auto f = natural_weight(groups::Symmetric{4});
  EXPECT_EQ(f(GroupElement{{1, 2, 3, 4}}), 4u);
  EXPECT_EQ(f(GroupElement{{2, 1, 3, 4}}), 2u);
  const auto z = natural_weight(groups::CyclicPower{3, 3});
  EXPECT_EQ(z(GroupElement{{0, 2, 0}}), 2u);
  const auto b = binomial_transform(f, 2);
  EXPECT_EQ(b(GroupElement{{1, 2, 3, 4}}), 6u);
  EXPECT_EQ(b(GroupElement{{2, 1, 3, 4}}), 1u);
  EXPECT_EQ(b(GroupElement{{2, 3, 1, 4}}), 0u);
}

TEST(Weights, InversionInvarianceIsRequired) {
  EXPECT_THROW(WeightFunction(groups::CyclicPower{4, 1}, {1, 2, 0, 3}), InvalidArgument);
  EXPECT_THROW(WeightFunction(groups::CyclicPower{4, 1}, {1, 2, 0}), InvalidArgument);
  EXPECT_NO_THROW(WeightFunction(groups::CyclicPower{4, 1}, {4, 7, 9, 7}));
}

TEST(Adjacency, EntryConventionAndSymmetry) {
  const WeightFunction w(groups::CyclicPower{4, 1}, {4, 7, 9, 7});
  const IntMatrix a = adjacency_matrix(w);
  EXPECT_EQ(a(0, 0), 4);
  EXPECT_EQ(a(0, 1), 7);
  EXPECT_EQ(a(0, 2), 9);
  EXPECT_EQ(a(1, 3), 9);
  for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(a(i, i), 4);
  const IntMatrix s = adjacency_matrix(binomial_transform(natural_weight(groups::Symmetric{4}), 1));
  for (std::size_t i = 0; i < s.rows(); ++i) {
    std::int64_t row = 0;
    for (std::size_t j = 0; j < s.cols(); ++j) {
      EXPECT_EQ(s(i, j), s(j, i));
      row += s(i, j);
    }
    EXPECT_EQ(static_cast<std::uint64_t>(row), weighted_degree(binomial_transform(natural_weight(groups::Symmetric{4}), 1)));
  }
}

TEST(Adjacency, EntriesMatchWeightOfQuotient) {
  const GroupSpec g = groups::Symmetric{4};
  const auto w = binomial_transform(natural_weight(g), 2);
  const auto els = groups::elements(g);
  const IntMatrix a = adjacency_matrix(w);
  for (std::size_t i = 0; i < els.size(); ++i)
    for (std::size_t j = 0; j < els.size(); ++j)
      ASSERT_EQ(static_cast<std::uint64_t>(a(i, j)), w(groups::compose(g, els[j], groups::inverse(g, els[i]))));
}

TEST(Adjacency, SizeGuard) {
  EXPECT_THROW(adjacency_matrix(natural_weight(groups::Symmetric{8})), SizeLimitExceeded);
}

TEST(WeightFile, RoundTrip) {
  const auto w = binomial_transform(natural_weight(groups::Symmetric{4}), 1);
  const auto text = format_weight_file(w);
  const auto back = parse_weight_file(text);
  EXPECT_EQ(back.class_values(), w.class_values());
  const WeightFunction z(groups::CyclicPower{2, 2}, {2, 1, 1, 0});
  EXPECT_EQ(parse_weight_file(format_weight_file(z)).class_values(), z.class_values());
}

TEST(WeightFile, Errors) {
  EXPECT_THROW(parse_weight_file("group = sym 3\n3 = 1\n2,1 = 0\n"), InvalidArgument);
  EXPECT_THROW(parse_weight_file("group = sym 3\n3 = 1\n2,1 = 0\n1,1,1 = 3\n3 = 2\n"), InvalidArgument);
  EXPECT_THROW(parse_weight_file("3 = 1\n"), InvalidArgument);
  EXPECT_THROW(parse_weight_file("group = cyclic 4 1\n0 = 4\n1 = 7\n2 = 9\n3 = -7\n"), InvalidArgument);
  const auto w = parse_weight_file("# Z4\ngroup = cyclic 4 1\n0 = 4\n1 = 7  # edge\n2 = 9\n3 = 7\n");
  EXPECT_EQ(w.class_values(), (std::vector<std::uint64_t>{4, 7, 9, 7}));
}

}  // namespace
}  // namespace bincayley::cayley
