#include <gtest/gtest.h>

#include "bincayley/cyclotomic.hpp"

namespace bincayley {
namespace {

using Poly = std::vector<std::int64_t>;

TEST(CyclotomicPolynomial, KnownSmallCases) {
  EXPECT_EQ(cyclotomic_polynomial(1), (Poly{-1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(2), (Poly{1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(4), (Poly{1, 0, 1}));
  EXPECT_EQ(cyclotomic_polynomial(6), (Poly{1, -1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(12), (Poly{1, 0, -1, 0, 1}));
  // First cyclotomic polynomial with a coefficient of absolute value 2.
  const auto& p105 = cyclotomic_polynomial(105);
  EXPECT_EQ(p105.size(), 49u);
  EXPECT_EQ(p105[7], -2);
}

TEST(CyclotomicPolynomial, DegreeIsEulerPhi) {
  for (int m : {1, 2, 7, 8, 9, 30, 64, 97, 360, 1024}) {
    int phi = 0;
    for (int i = 1; i <= m; ++i) {
      int a = i, b = m;
      while (b) std::swap(a %= b, b);
      phi += a == 1;
    }
    EXPECT_EQ(euler_phi(m), phi) << m;
  }
}

TEST(CyclotomicValue, RootSumsVanish) {
  for (int m : {2, 3, 4, 6, 12, 15, 30}) {
    CyclotomicValue s(m);
    for (int e = 0; e < m; ++e) s.add_power(e, 1);
    EXPECT_TRUE(s.is_zero()) << m;
  }
}

TEST(CyclotomicValue, ProductWithConjugateIsNorm) {
  const auto z = CyclotomicValue::root_power(8, 1);
  EXPECT_EQ((z * z.conjugate()).as_integer(), 1);
  auto w = CyclotomicValue::integer(5, 2);
  w += CyclotomicValue::root_power(5, 1);
  EXPECT_FALSE(w.as_integer().has_value());
  EXPECT_EQ(CyclotomicValue::root_power(4, 2).as_integer(), -1);
  EXPECT_EQ(CyclotomicValue::root_power(6, 3).to_string(), "-1");
  EXPECT_EQ(CyclotomicValue::root_power(4, 5), CyclotomicValue::root_power(4, 1));
  EXPECT_EQ(CyclotomicValue::root_power(4, -1).to_string(), "-z");
}

TEST(CyclotomicValue, GaussSumSquareForFive) {
  // (sum of Legendre-weighted fifth roots)^2 == 5.
  CyclotomicValue g(5);
  for (int a = 1; a < 5; ++a) g.add_power(a, (a == 1 || a == 4) ? 1 : -1);
  EXPECT_EQ((g * g).as_integer(), 5);
}

}  // namespace
}  // namespace bincayley
