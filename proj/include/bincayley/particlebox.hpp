#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bincayley/lp.hpp"
#include "bincayley/matrix.hpp"
#include "bincayley/rational.hpp"

namespace bincayley::particlebox {

// n particles in m boxes. All: any assignment of boxes to particles.
// Bij: n == m and the assignment is a bijection.
enum class Sigma { All, Bij };

std::string sigma_name(Sigma s);
Sigma parse_sigma(std::string_view text);

inline constexpr std::uint64_t kMaxArrangements = 5040;

struct SystemSpec {
  int n = 0;
  int m = 0;
  int k = 0;  // size of the observed particle subsets
  Sigma sigma = Sigma::All;
  void validate() const;
};

// Box (0-based) of each particle. Canonical order is lexicographic, which
// for Bij is the lexicographic order of one-line permutations.
using Arrangement = std::vector<int>;

std::vector<Arrangement> arrangements(const SystemSpec& s);
// All: "0,1,1" (boxes); Bij: one-line permutation "2,1,3" (box + 1 per particle).
std::string arrangement_key(const SystemSpec& s, const Arrangement& a);
Arrangement parse_arrangement(const SystemSpec& s, std::string_view key);

// Row of a restriction matrix: particles i (1-based, increasing) and the
// boxes j (0-based) they occupy; for Bij the boxes are distinct.
struct RowKey {
  std::vector<int> particles;
  std::vector<int> boxes;
  friend auto operator<=>(const RowKey&, const RowKey&) = default;
};

std::vector<RowKey> row_keys(const SystemSpec& s, int level);
std::string row_key_string(const RowKey& r);  // "i=(1,3);j=(0,2)"
RowKey parse_row_key(std::string_view text);

// Masses over arrangements in canonical order.
using Measure = std::vector<Rat>;

void validate_signed_measure(const SystemSpec& s, std::span<const Rat> p);  // total mass 1
void validate_distribution(const SystemSpec& s, std::span<const Rat> p);    // also nonnegative

// Values indexed like row_keys(spec, spec.k).
struct MarginalFamily {
  SystemSpec spec;
  std::vector<Rat> values;
  const Rat& at(const RowKey& key) const;
};

// 0/1 matrix with entry 1 when the arrangement puts particles i in boxes j.
RatMatrix restriction_matrix(const SystemSpec& s);
RatMatrix restriction_matrix(const SystemSpec& s, int level);

MarginalFamily restrict(const SystemSpec& s, std::span<const Rat> p);

// M^T M, checked against the binomial Cayley adjacency of the matching group.
IntMatrix gram_matrix(const SystemSpec& s);

struct CompatibilityReport {
  bool compatible = true;
  std::string violation;
};

// Every further restriction to fewer particles (including the empty set)
// must not depend on which k-subset it was computed from.
CompatibilityReport compatibility_check(const MarginalFamily& f);

enum class Verdict { Observable, Incompatible, NoSignedSolution, WrongTotalMass, NoNonnegativeSolution };
std::string verdict_name(Verdict v);

struct ObservabilityReport {
  Verdict verdict = Verdict::Incompatible;
  std::string detail;
  Measure witness;          // Observable: a distribution restricting to the family
  Measure signed_solution;  // any exact solution of M q = family, when one exists
  // NoNonnegativeSolution: y >= 0 on arrangements with y . kernel == 0 and
  // y . signed_solution < 0, and z on family rows with M^T z == y.
  std::vector<Rat> farkas;
  std::vector<Rat> family_multipliers;
  bool observable() const { return verdict == Verdict::Observable; }
};

ObservabilityReport observability_check(const MarginalFamily& f);

// { c : p + K c >= 0 } with K the kernel basis of the restriction matrix.
struct FiberQuery {
  std::vector<Measure> kernel;
  exactla::PolytopeQuery query;
};
FiberQuery fiber_query(const SystemSpec& s, std::span<const Rat> p);

// Dimension of the set of distributions with the same k-restriction as p.
std::size_t degeneracy(const SystemSpec& s, std::span<const Rat> p);

// Endpoints of the fiber when the kernel is one-dimensional and the fiber is
// a segment; the first endpoint has the smaller kernel coordinate.
std::optional<std::pair<Measure, Measure>> segment_endpoints(const SystemSpec& s, std::span<const Rat> p);

// P with M^level = P M^(level+1): entry 1/(n-level) (All) or 1/(m-level)
// (Bij) where the finer row extends the coarser one.
RatMatrix projection_matrix(const SystemSpec& s, int level);

// Samples arrangements from p and tallies the observed k-marginals.
// Sampling is exact: mt19937_64 words drive rejection sampling of an integer
// below the common denominator of p, then an inverse-CDF lookup.
MarginalFamily simulate_game(const SystemSpec& s, std::span<const Rat> p, std::uint64_t rounds, std::uint64_t seed);
inline constexpr const char* kSamplerName = "mt19937_64-rejection-v1";

// "key = value" text files. Distribution files list arrangement keys;
// arrangements not listed have mass 0. Family files must list every row.
Measure parse_distribution_file(const SystemSpec& s, std::string_view text);
std::string format_distribution(const SystemSpec& s, std::span<const Rat> p);
MarginalFamily parse_family_file(const SystemSpec& s, std::string_view text);
std::string format_family(const MarginalFamily& f);

}  // namespace bincayley::particlebox
