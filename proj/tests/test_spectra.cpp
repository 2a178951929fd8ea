#include <gtest/gtest.h>

#include "bincayley/cayley.hpp"
#include "bincayley/exactla.hpp"
#include "bincayley/numeric.hpp"
#include "bincayley/spectra.hpp"

namespace bincayley::spectra {
namespace {

using Pairs = std::vector<std::pair<Rat, std::uint64_t>>;

Pairs pairs(const SpectrumReport& r) {
  Pairs out;
  for (const auto& e : r.entries) out.emplace_back(e.eigenvalue, e.multiplicity);
  return out;
}

cayley::WeightFunction z4(int k) {
  return cayley::binomial_transform(cayley::WeightFunction(groups::CyclicPower{4, 1}, {4, 7, 9, 7}), k);
}

TEST(Spectrum, FrozenSmallCases) {
  EXPECT_EQ(pairs(sym_spectrum(3, 1)), (Pairs{{6, 1}, {3, 4}, {0, 1}}));
  EXPECT_EQ(pairs(cyclic_spectrum(2, 3, 2)), (Pairs{{6, 1}, {4, 3}, {2, 3}, {0, 1}}));
  EXPECT_EQ(pairs(generic_spectrum(z4(1))), (Pairs{{27, 1}, {-1, 1}, {-5, 2}}));
  EXPECT_EQ(pairs(generic_spectrum(z4(2))), (Pairs{{84, 1}, {0, 1}, {-30, 2}}));
}

TEST(Spectrum, SymEigenvalueForATwoTwoOneShape) {
  const auto r = sym_spectrum(5, 3);
  bool found = false;
  for (const auto& e : r.entries)
    for (const auto& label : e.contributors)
      if (label == "2,2,1") {
        EXPECT_EQ(e.eigenvalue, 8);
        found = true;
      }
  EXPECT_TRUE(found);
}

TEST(Spectrum, ClosedFormsMatchCharacterSums) {
  for (int m = 1; m <= 6; ++m)
    for (int k = 0; k <= m; ++k) {
      const auto w = cayley::binomial_transform(cayley::natural_weight(groups::Symmetric{m}), k);
      EXPECT_TRUE(same_spectrum(sym_spectrum(m, k), generic_spectrum(w))) << m << " " << k;
    }
  for (int m = 2; m <= 5; ++m)
    for (int n = 1; n <= 3; ++n)
      for (int k = 0; k <= n; ++k) {
        const auto w = cayley::binomial_transform(cayley::natural_weight(groups::CyclicPower{m, n}), k);
        EXPECT_TRUE(same_spectrum(cyclic_spectrum(m, n, k), generic_spectrum(w))) << m << " " << n << " " << k;
      }
}

TEST(Spectrum, ExactVerificationAgainstAdjacency) {
  for (int m = 1; m <= 4; ++m)
    for (int k = 0; k <= m; ++k) {
      const auto w = cayley::binomial_transform(cayley::natural_weight(groups::Symmetric{m}), k);
      EXPECT_TRUE(verify_spectrum_exact(cayley::adjacency_matrix(w), sym_spectrum(m, k)).ok);
    }
  const auto a = cayley::adjacency_matrix(z4(1));
  EXPECT_TRUE(verify_spectrum_exact(a, generic_spectrum(z4(1))).ok);
}

TEST(Spectrum, WrongClaimIsReported) {
  auto claim = generic_spectrum(z4(1));
  claim.entries[1].multiplicity = 2;
  claim.entries[2].multiplicity = 1;
  const auto v = verify_spectrum_exact(cayley::adjacency_matrix(z4(1)), claim);
  EXPECT_FALSE(v.ok);
  EXPECT_NE(v.message.find("-1"), std::string::npos);
}

TEST(Spectrum, NestedKernelCounterexample) {
  EXPECT_NE(exactla::determinant(to_rational(cayley::adjacency_matrix(z4(1)))), 0);
  EXPECT_EQ(exactla::determinant(to_rational(cayley::adjacency_matrix(z4(2)))), 0);
  EXPECT_EQ(generic_spectrum(z4(1)).kernel_dimension(), 0u);
  EXPECT_EQ(generic_spectrum(z4(2)).kernel_dimension(), 1u);
}

TEST(Spectrum, IrrationalEigenvaluesAreRejected) {
  const cayley::WeightFunction w(groups::CyclicPower{5, 1}, {0, 1, 0, 0, 1});
  EXPECT_THROW(generic_spectrum(w), IrrationalSpectrum);
}

TEST(Spectrum, MultiplicitiesSumToOrder) {
  for (int m = 1; m <= 8; ++m)
    for (int k = 0; k <= m; ++k) {
      const auto r = sym_spectrum(m, k);
      std::uint64_t total = 0;
      for (const auto& e : r.entries) total += e.multiplicity;
      EXPECT_EQ(total, factorial(m));
      EXPECT_EQ(sym_kernel_dim(m, k) + sym_rank(m, k), factorial(m));
    }
}

TEST(KernelDimension, ClosedFormAndRecursion) {
  EXPECT_EQ(sym_kernel_dim(5, 2), 42u);
  EXPECT_EQ(cyclic_kernel_dim(2, 3, 2), 1u);
  for (int m = 1; m <= 5; ++m)
    for (int n = 1; n <= 6; ++n)
      for (int k = 1; k <= n; ++k) EXPECT_EQ(rank_recursion(n, m, k), cyclic_rank(m, n, k)) << m << n << k;
}

TEST(Lemmas, SmallBoundsHaveNoFailures) {
  const LemmaBounds b{8, 6, 64, 4};
  for (const auto& r : lemma_suite(b)) {
    EXPECT_GT(r.instances, 0u) << r.name;
    EXPECT_EQ(r.failures, 0u) << r.name << ": " << r.first_failure;
  }
}

TEST(Decomposition, FixedPointWeightHasTwoConstituents) {
  for (int m = 2; m <= 5; ++m) {
    const auto c = decompose_class_function(cayley::natural_weight(groups::Symmetric{m}));
    for (const auto& a : c) {
      const bool expected = a.label == std::to_string(m) || a.label == std::to_string(m - 1) + ",1";
      EXPECT_EQ(a.value, expected ? 1 : 0) << a.label;
    }
  }
}

TEST(AbelianEigenvector, VerifiedForEveryCharacter) {
  const auto w = cayley::binomial_transform(cayley::natural_weight(groups::CyclicPower{3, 2}), 1);
  for (const auto& y : groups::elements(w.group())) {
    const auto v = abelian_eigenvector(w, y);
    EXPECT_TRUE(v.verified);
    EXPECT_EQ(v.entries.size(), 9u);
  }
}

}  // namespace
}  // namespace bincayley::spectra
