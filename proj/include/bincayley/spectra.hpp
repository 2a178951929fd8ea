#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bincayley/cayley.hpp"
#include "bincayley/cyclotomic.hpp"
#include "bincayley/error.hpp"
#include "bincayley/matrix.hpp"
#include "bincayley/rational.hpp"

namespace bincayley::spectra {

// A custom weight produced an eigenvalue outside Q.
class IrrationalSpectrum : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

struct SpectrumEntry {
  Rat eigenvalue;
  std::uint64_t multiplicity = 0;
  std::vector<std::string> contributors;  // character labels
};

struct SpectrumReport {
  std::string group;
  std::uint64_t group_order = 0;
  std::vector<SpectrumEntry> entries;  // distinct eigenvalues, descending

  std::uint64_t multiplicity(const Rat& eigenvalue) const;  // 0 when absent
  std::uint64_t kernel_dimension() const { return multiplicity(Rat(0)); }
};

bool same_spectrum(const SpectrumReport& a, const SpectrumReport& b);

// One eigenvalue per irreducible character, computed from character sums.
SpectrumReport generic_spectrum(const cayley::WeightFunction& w);

// Closed forms for the binomial transforms of the natural weights.
SpectrumReport sym_spectrum(int m, int k);
SpectrumReport cyclic_spectrum(int m, int n, int k);

std::uint64_t sym_kernel_dim(int m, int k);
std::uint64_t sym_rank(int m, int k);
std::uint64_t cyclic_kernel_dim(int m, int n, int k);
std::uint64_t cyclic_rank(int m, int n, int k);
// R_k = R_{k-1} + C(n,k) (m^k - R_{k-1} of (Z_m)^k), R_0 = 1.
std::uint64_t rank_recursion(int n, int m, int k);

struct EigenCheck {
  Rat eigenvalue;
  std::uint64_t claimed = 0;
  std::uint64_t actual = 0;  // exact nullity of A - eigenvalue*I
};

struct VerificationReport {
  bool ok = false;
  std::vector<EigenCheck> checks;
  std::string message;  // names the first failing eigenvalue
};

// Checks every claimed multiplicity against the exact nullity of A - l*I.
VerificationReport verify_spectrum_exact(const IntMatrix& a, const SpectrumReport& claimed);

struct LemmaBounds {
  int generating_max = 20;     // M, N, k range for the alternating binomial identity
  int cyclic_max_m = 12;       // single-coordinate character sums
  int cyclic_max_order = 512;  // m^n bound for the zero-count character sums
  int sym_max_m = 6;           // change-of-binomial and subgroup character sums
};

struct LemmaResult {
  std::string name;
  std::uint64_t instances = 0;
  std::uint64_t failures = 0;
  std::string first_failure;
};

std::vector<LemmaResult> lemma_suite(const LemmaBounds& bounds);

struct Coefficient {
  std::string label;
  Rat value;
};

// <w, chi> for every irreducible chi.
std::vector<Coefficient> decompose_class_function(const cayley::WeightFunction& w);

struct AbelianEigenvector {
  std::vector<CyclotomicValue> entries;  // v_x = z^{-y.x}
  Rat eigenvalue;
  bool verified = false;                 // A v == eigenvalue * v over Z[z]
};

AbelianEigenvector abelian_eigenvector(const cayley::WeightFunction& w, const groups::GroupElement& y);

}  // namespace bincayley::spectra
