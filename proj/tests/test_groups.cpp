#include <gtest/gtest.h>

#include <set>

#include "bincayley/error.hpp"
#include "bincayley/groups.hpp"

namespace bincayley::groups {
namespace {

GroupElement E(std::vector<int> v) { return GroupElement{std::move(v)}; }

TEST(Groups, OrdersAndNames) {
  EXPECT_EQ(order(Symmetric{5}), 120u);
  EXPECT_EQ(order(CyclicPower{3, 4}), 81u);
  EXPECT_EQ(describe(Symmetric{3}), "Sym(3)");
  EXPECT_EQ(describe(CyclicPower{4, 1}), "CyclicPower(4,1)");
  EXPECT_THROW(validate(Symmetric{0}), InvalidArgument);
  EXPECT_THROW(validate(CyclicPower{2, 0}), InvalidArgument);
  EXPECT_THROW(elements(Symmetric{9}), SizeLimitExceeded);
}

TEST(Groups, CompositionConvention) {
  const GroupSpec g = Symmetric{3};
  // (a*b)(i) = a(b(i))
  EXPECT_EQ(compose(g, E({2, 3, 1}), E({2, 1, 3})).entries, (std::vector<int>{3, 2, 1}));
  EXPECT_EQ(inverse(g, E({2, 3, 1})).entries, (std::vector<int>{3, 1, 2}));
  const GroupSpec c = CyclicPower{4, 2};
  EXPECT_EQ(compose(c, E({3, 1}), E({2, 3})).entries, (std::vector<int>{1, 0}));
  EXPECT_EQ(inverse(c, E({3, 0})).entries, (std::vector<int>{1, 0}));
}

TEST(Groups, GroupAxiomsOnSmallGroups) {
  for (const GroupSpec& g : {GroupSpec{Symmetric{4}}, GroupSpec{CyclicPower{3, 2}}}) {
    const auto els = elements(g);
    const auto e = identity(g);
    for (const auto& a : els) {
      EXPECT_EQ(compose(g, a, inverse(g, a)), e);
      EXPECT_EQ(compose(g, e, a), a);
      for (const auto& b : els)
        for (const auto& c : {els[1], els.back()})
          EXPECT_EQ(compose(g, compose(g, a, b), c), compose(g, a, compose(g, b, c)));
    }
  }
}

TEST(Groups, IndexIsPositionInCanonicalOrder) {
  for (const GroupSpec& g : {GroupSpec{Symmetric{5}}, GroupSpec{CyclicPower{3, 3}}}) {
    const auto els = elements(g);
    for (std::size_t i = 0; i < els.size(); ++i) {
      EXPECT_EQ(element_index(g, els[i]), i);
      EXPECT_EQ(parse_element(g, element_label(g, els[i])), els[i]);
    }
  }
  EXPECT_EQ(element_label(CyclicPower{2, 3}, E({1, 0, 1})), "1|0|1");
  EXPECT_THROW(parse_element(Symmetric{3}, "1,1,2"), InvalidArgument);
}

TEST(Groups, CycleTypesAndFixedPoints) {
  EXPECT_EQ(cycle_type(E({2, 1, 4, 5, 3})).parts(), (std::vector<int>{3, 2}));
  EXPECT_EQ(fixed_points(E({1, 3, 2, 4})), 2);
  EXPECT_EQ(zero_count(E({0, 2, 0})), 2);
}

TEST(ConjugacyClasses, SymClassesMatchCycleTypes) {
  const GroupSpec g = Symmetric{5};
  const auto classes = conjugacy_classes(g);
  EXPECT_EQ(classes.size(), 7u);
  std::vector<std::uint64_t> seen(classes.size(), 0);
  for (const auto& x : elements(g)) ++seen[class_index(g, x)];
  for (std::size_t i = 0; i < classes.size(); ++i) {
    EXPECT_EQ(seen[i], classes[i].size);
    EXPECT_EQ(cycle_type(classes[i].representative), classes[i].cycle_type);
    EXPECT_EQ(class_index_of_label(g, classes[i].label), i);
  }
}

TEST(ConjugacyClasses, ClassesAreClosedUnderConjugation) {
  const GroupSpec g = Symmetric{4};
  const auto els = elements(g);
  for (const auto& x : els)
    for (const auto& h : els)
      EXPECT_EQ(class_index(g, compose(g, compose(g, h, x), inverse(g, h))), class_index(g, x));
}

TEST(Characters, CyclicCharacterIsAHomomorphism) {
  const GroupSpec g = CyclicPower{4, 2};
  const auto els = elements(g);
  const auto& y = els[6];
  for (const auto& a : els)
    for (const auto& b : els)
      EXPECT_EQ(cyclic_character(4, y, compose(g, a, b)), cyclic_character(4, y, a) * cyclic_character(4, y, b));
}

TEST(Characters, LabelsAndValues) {
  const GroupSpec g = Symmetric{3};
  const auto labels = irreducible_labels(g);
  ASSERT_EQ(labels.size(), 3u);
  EXPECT_EQ(character_label_string(g, labels[1]), "2,1");
  const auto classes = conjugacy_classes(g);
  EXPECT_EQ(std::get<std::int64_t>(character_value(g, labels[1], classes.back())), 2);
  const GroupSpec c = CyclicPower{4, 1};
  const auto v = character_value(c, irreducible_labels(c)[1], conjugacy_classes(c)[1]);
  EXPECT_EQ(std::get<CyclotomicValue>(v).to_string(), "z");
}

}  // namespace
}  // namespace bincayley::groups
