#include "bincayley/particlebox.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include "bincayley/cayley.hpp"
#include "bincayley/error.hpp"
#include "bincayley/exactla.hpp"
#include "bincayley/numeric.hpp"
#include "bincayley/textio.hpp"

namespace bincayley::particlebox {

namespace {

int max_level(const SystemSpec& s) { return s.sigma == Sigma::All ? s.n : s.m; }

void check_level(const SystemSpec& s, int level) {
  require(level >= 0 && level <= max_level(s),
          "subset size " + std::to_string(level) + " outside 0.." + std::to_string(max_level(s)));
}

std::vector<std::vector<int>> subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<std::size_t>(k));
  std::iota(cur.begin(), cur.end(), 1);
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == n - k + i + 1) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

// Box tuples of length k in lexicographic order; distinct entries for Bij.
std::vector<std::vector<int>> box_tuples(const SystemSpec& s, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<std::size_t>(k), 0);
  const bool distinct = s.sigma == Sigma::Bij;
  while (true) {
    bool ok = true;
    if (distinct) {
      std::vector<bool> seen(static_cast<std::size_t>(s.m), false);
      for (int b : cur) {
        if (seen[b]) ok = false;
        seen[b] = true;
      }
    }
    if (ok) out.push_back(cur);
    int pos = k - 1;
    while (pos >= 0 && cur[pos] == s.m - 1) cur[pos--] = 0;
    if (pos < 0) break;
    ++cur[pos];
  }
  return out;
}

// Row bookkeeping for one restriction level.
struct Layout {
  std::vector<std::vector<int>> subsets;
  std::vector<std::vector<int>> tuples;
  std::map<std::vector<int>, std::size_t> tuple_index;

  Layout(const SystemSpec& s, int level) : subsets(particlebox::subsets(s.n, level)), tuples(box_tuples(s, level)) {
    for (std::size_t i = 0; i < tuples.size(); ++i) tuple_index.emplace(tuples[i], i);
  }
  std::size_t rows() const { return subsets.size() * tuples.size(); }

  // Rows hit by arrangement a, one per subset.
  std::vector<std::size_t> incidence(const Arrangement& a) const {
    std::vector<std::size_t> out;
    out.reserve(subsets.size());
    std::vector<int> j;
    for (std::size_t si = 0; si < subsets.size(); ++si) {
      j.clear();
      for (int particle : subsets[si]) j.push_back(a[particle - 1]);
      out.push_back(si * tuples.size() + tuple_index.at(j));
    }
    return out;
  }
};

std::size_t row_index(const SystemSpec& s, const RowKey& key) {
  const auto keys = row_keys(s, static_cast<int>(key.particles.size()));
  auto it = std::lower_bound(keys.begin(), keys.end(), key);
  require(it != keys.end() && *it == key, "unknown row " + row_key_string(key));
  return static_cast<std::size_t>(it - keys.begin());
}

std::string tuple_string(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s + ")";
}

std::vector<int> parse_tuple(std::string_view text) {
  text = trim(text);
  require(text.size() >= 2 && text.front() == '(' && text.back() == ')', "expected a parenthesised tuple, got '" +
                                                                            std::string(text) + "'");
  return parse_int_list(text.substr(1, text.size() - 2));
}

Rat total(std::span<const Rat> p) {
  Rat s = 0;
  for (const Rat& q : p) s += q;
  return s;
}

// Uniform integer in [0, bound) from whole mt19937_64 words by rejection.
Int uniform_below(std::mt19937_64& gen, const Int& bound) {
  const std::size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
  const std::size_t words = (bits + 63) / 64;
  std::vector<std::uint64_t> buf(words);
  Int x;
  while (true) {
    for (auto& w : buf) w = gen();
    mpz_import(x.get_mpz_t(), words, -1, sizeof(std::uint64_t), 0, 0, buf.data());
    mpz_fdiv_r_2exp(x.get_mpz_t(), x.get_mpz_t(), bits);
    if (x < bound) return x;
  }
}

}  // namespace

std::string sigma_name(Sigma s) { return s == Sigma::All ? "all" : "bij"; }

Sigma parse_sigma(std::string_view text) {
  if (text == "all") return Sigma::All;
  if (text == "bij") return Sigma::Bij;
  throw_invalid("arrangement class must be 'all' or 'bij', got '" + std::string(text) + "'");
}

void SystemSpec::validate() const {
  require(n >= 1 && m >= 1, "particle-box system needs n >= 1 and m >= 1");
  if (sigma == Sigma::Bij) require(n == m, "bijective arrangements need n == m");
  require(k >= 0 && k <= n, "restriction size k must satisfy 0 <= k <= n");
  const std::uint64_t count = sigma == Sigma::All ? checked_pow(static_cast<std::uint64_t>(m), static_cast<unsigned>(n))
                                                  : factorial(static_cast<unsigned>(std::min(m, 21)));
  if (count > kMaxArrangements)
    throw SizeLimitExceeded("system has " + std::to_string(count) + " arrangements; limit is " +
                            std::to_string(kMaxArrangements));
}

std::vector<Arrangement> arrangements(const SystemSpec& s) {
  s.validate();
  std::vector<Arrangement> out;
  if (s.sigma == Sigma::All) {
    for (auto& t : box_tuples(SystemSpec{s.n, s.m, s.k, Sigma::All}, s.n)) out.push_back(std::move(t));
  } else {
    Arrangement a(static_cast<std::size_t>(s.n));
    std::iota(a.begin(), a.end(), 0);
    do {
      out.push_back(a);
    } while (std::next_permutation(a.begin(), a.end()));
  }
  return out;
}

std::string arrangement_key(const SystemSpec& s, const Arrangement& a) {
  std::string out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s.sigma == Sigma::Bij ? a[i] + 1 : a[i]);
  }
  return out;
}

Arrangement parse_arrangement(const SystemSpec& s, std::string_view key) {
  Arrangement a = parse_int_list(key);
  require(static_cast<int>(a.size()) == s.n, "arrangement '" + std::string(key) + "' must have " +
                                                 std::to_string(s.n) + " entries");
  if (s.sigma == Sigma::Bij) {
    for (int& v : a) --v;
    std::vector<bool> seen(static_cast<std::size_t>(s.m), false);
    for (int v : a) {
      require(v >= 0 && v < s.m && !seen[v], "'" + std::string(key) + "' is not a permutation of 1.." + std::to_string(s.m));
      seen[v] = true;
    }
  } else {
    for (int v : a) require(v >= 0 && v < s.m, "box out of range in '" + std::string(key) + "'");
  }
  return a;
}

std::vector<RowKey> row_keys(const SystemSpec& s, int level) {
  s.validate();
  check_level(s, level);
  Layout layout(s, level);
  std::vector<RowKey> out;
  out.reserve(layout.rows());
  for (const auto& i : layout.subsets)
    for (const auto& j : layout.tuples) out.push_back({i, j});
  return out;
}

std::string row_key_string(const RowKey& r) { return "i=" + tuple_string(r.particles) + ";j=" + tuple_string(r.boxes); }

RowKey parse_row_key(std::string_view text) {
  std::string_view s = trim(text);
  auto semi = s.find(';');
  require(semi != std::string_view::npos, "row key '" + std::string(text) + "' needs the form i=(..);j=(..)");
  std::string_view left = trim(s.substr(0, semi)), right = trim(s.substr(semi + 1));
  require(left.substr(0, 2) == "i=" && right.substr(0, 2) == "j=",
          "row key '" + std::string(text) + "' needs the form i=(..);j=(..)");
  RowKey r{parse_tuple(left.substr(2)), parse_tuple(right.substr(2))};
  require(r.particles.size() == r.boxes.size(), "row key '" + std::string(text) + "' has mismatched tuple lengths");
  return r;
}

void validate_signed_measure(const SystemSpec& s, std::span<const Rat> p) {
  require(p.size() == arrangements(s).size(), "measure length " + std::to_string(p.size()) +
                                                  " does not match the arrangement count");
  require(total(p) == 1, "total mass is " + to_string(total(p)) + ", expected 1");
}

void validate_distribution(const SystemSpec& s, std::span<const Rat> p) {
  validate_signed_measure(s, p);
  for (const Rat& q : p) require(sgn(q) >= 0, "distribution has a negative mass " + to_string(q));
}

const Rat& MarginalFamily::at(const RowKey& key) const {
  require(static_cast<int>(key.particles.size()) == spec.k, "row key has the wrong subset size");
  return values.at(row_index(spec, key));
}

RatMatrix restriction_matrix(const SystemSpec& s) { return restriction_matrix(s, s.k); }

RatMatrix restriction_matrix(const SystemSpec& s, int level) {
  const auto arr = arrangements(s);
  check_level(s, level);
  Layout layout(s, level);
  RatMatrix out(layout.rows(), arr.size());
  for (std::size_t c = 0; c < arr.size(); ++c)
    for (std::size_t r : layout.incidence(arr[c])) out(r, c) = 1;
  return out;
}

MarginalFamily restrict(const SystemSpec& s, std::span<const Rat> p) {
  const auto arr = arrangements(s);
  require(p.size() == arr.size(), "measure length does not match the arrangement count");
  Layout layout(s, s.k);
  MarginalFamily f{s, std::vector<Rat>(layout.rows())};
  for (std::size_t c = 0; c < arr.size(); ++c) {
    if (sgn(p[c]) == 0) continue;
    for (std::size_t r : layout.incidence(arr[c])) f.values[r] += p[c];
  }
  return f;
}

IntMatrix gram_matrix(const SystemSpec& s) {
  const auto arr = arrangements(s);
  Layout layout(s, s.k);
  std::vector<std::vector<std::size_t>> by_row(layout.rows());
  for (std::size_t c = 0; c < arr.size(); ++c)
    for (std::size_t r : layout.incidence(arr[c])) by_row[r].push_back(c);
  IntMatrix g(arr.size(), arr.size());
  for (const auto& cols : by_row)
    for (std::size_t a : cols)
      for (std::size_t b : cols) ++g(a, b);

  const groups::GroupSpec group =
      s.sigma == Sigma::All ? groups::GroupSpec{groups::CyclicPower{s.m, s.n}} : groups::GroupSpec{groups::Symmetric{s.m}};
  const IntMatrix adj = cayley::adjacency_matrix(cayley::binomial_transform(cayley::natural_weight(group), s.k));
  ensure(g == adj, "Gram matrix of the restriction differs from the binomial Cayley adjacency");
  return g;
}

CompatibilityReport compatibility_check(const MarginalFamily& f) {
  const SystemSpec& s = f.spec;
  s.validate();
  require(f.values.size() == row_keys(s, s.k).size(), "family has the wrong number of entries");
  Layout top(s, s.k);
  CompatibilityReport out;
  for (int sub = 0; sub < s.k; ++sub) {
    Layout low(s, sub);
    // First marginal seen for each coarse subset, and the subset it came from.
    std::map<std::vector<int>, std::pair<std::size_t, std::vector<Rat>>> seen;
    for (std::size_t si = 0; si < top.subsets.size(); ++si) {
      const auto& big = top.subsets[si];
      for (const auto& small : subsets(static_cast<int>(big.size()), sub)) {
        std::vector<int> coarse;
        std::vector<std::size_t> pos;  // positions inside `big`
        for (int idx : small) {
          coarse.push_back(big[idx - 1]);
          pos.push_back(static_cast<std::size_t>(idx - 1));
        }
        std::vector<Rat> marginal(low.tuples.size());
        for (std::size_t ti = 0; ti < top.tuples.size(); ++ti) {
          std::vector<int> j;
          for (std::size_t p : pos) j.push_back(top.tuples[ti][p]);
          marginal[low.tuple_index.at(j)] += f.values[si * top.tuples.size() + ti];
        }
        auto [it, fresh] = seen.try_emplace(coarse, si, marginal);
        if (fresh || it->second.second == marginal) continue;
        for (std::size_t ti = 0; ti < low.tuples.size(); ++ti) {
          if (it->second.second[ti] == marginal[ti]) continue;
          std::ostringstream os;
          os << "restriction to i=" << tuple_string(coarse) << ", j=" << tuple_string(low.tuples[ti]) << " is "
             << to_string(it->second.second[ti]) << " from i=" << tuple_string(top.subsets[it->second.first])
             << " but " << to_string(marginal[ti]) << " from i=" << tuple_string(big);
          out.compatible = false;
          out.violation = os.str();
          return out;
        }
      }
    }
  }
  return out;
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Observable: return "observable";
    case Verdict::Incompatible: return "incompatible";
    case Verdict::NoSignedSolution: return "no-signed-solution";
    case Verdict::WrongTotalMass: return "wrong-total-mass";
    case Verdict::NoNonnegativeSolution: return "no-nonnegative-solution";
  }
  return "unknown";
}

ObservabilityReport observability_check(const MarginalFamily& f) {
  ObservabilityReport out;
  CompatibilityReport compat = compatibility_check(f);
  if (!compat.compatible) {
    out.verdict = Verdict::Incompatible;
    out.detail = compat.violation;
    return out;
  }
  const RatMatrix m = restriction_matrix(f.spec);
  auto q = exactla::solve(m, f.values);
  if (!q) {
    out.verdict = Verdict::NoSignedSolution;
    out.detail = "the family is not in the column space of the restriction matrix";
    return out;
  }
  out.signed_solution = *q;
  if (total(*q) != 1) {
    out.verdict = Verdict::WrongTotalMass;
    out.detail = "every solution has total mass " + to_string(total(*q));
    return out;
  }
  FiberQuery fq = fiber_query(f.spec, *q);
  exactla::Feasibility feas = exactla::lp_feasible(fq.query);
  if (feas.feasible) {
    Measure w = *q;
    for (std::size_t j = 0; j < fq.kernel.size(); ++j)
      for (std::size_t a = 0; a < w.size(); ++a) w[a] += feas.witness[j] * fq.kernel[j][a];
    ensure(multiply(m, w) == f.values, "observability witness does not restrict to the family");
    out.verdict = Verdict::Observable;
    out.witness = std::move(w);
    return out;
  }
  out.verdict = Verdict::NoNonnegativeSolution;
  out.detail = "no nonnegative distribution restricts to the family";
  out.farkas = feas.farkas;
  // y is orthogonal to the kernel, so it lies in the row space of M.
  auto z = exactla::solve(transpose(m), out.farkas);
  ensure(z.has_value(), "infeasibility certificate is not in the row space of the restriction matrix");
  out.family_multipliers = *z;
  return out;
}

FiberQuery fiber_query(const SystemSpec& s, std::span<const Rat> p) {
  validate_signed_measure(s, p);
  FiberQuery fq;
  fq.kernel = exactla::kernel_basis(restriction_matrix(s));
  fq.query.normals = RatMatrix(p.size(), fq.kernel.size());
  for (std::size_t j = 0; j < fq.kernel.size(); ++j)
    for (std::size_t a = 0; a < p.size(); ++a) fq.query.normals(a, j) = fq.kernel[j][a];
  fq.query.offsets.assign(p.begin(), p.end());
  return fq;
}

std::size_t degeneracy(const SystemSpec& s, std::span<const Rat> p) {
  validate_distribution(s, p);
  FiberQuery fq = fiber_query(s, p);
  const std::size_t dim = exactla::polytope_dimension(fq.query);
  ensure(dim <= fq.kernel.size(), "fiber dimension exceeds the kernel dimension");
  const bool interior = std::all_of(p.begin(), p.end(), [](const Rat& q) { return sgn(q) > 0; });
  ensure(!interior || dim == fq.kernel.size(), "interior point with a lower-dimensional fiber");
  return dim;
}

std::optional<std::pair<Measure, Measure>> segment_endpoints(const SystemSpec& s, std::span<const Rat> p) {
  validate_distribution(s, p);
  FiberQuery fq = fiber_query(s, p);
  if (fq.kernel.size() != 1) return std::nullopt;
  const std::vector<Rat> up{Rat(1)}, down{Rat(-1)};
  const auto hi = exactla::lp_maximize(fq.query, up);
  const auto lo = exactla::lp_maximize(fq.query, down);
  using Status = exactla::Optimum::Status;
  ensure(hi.status != Status::Infeasible && lo.status != Status::Infeasible, "fiber of a distribution is empty");
  ensure(hi.status == Status::Optimal && lo.status == Status::Optimal, "fiber inside the simplex is unbounded");
  if (hi.value == -lo.value) return std::nullopt;
  auto point = [&](const Rat& t) {
    Measure q(p.begin(), p.end());
    for (std::size_t a = 0; a < q.size(); ++a) q[a] += t * fq.kernel[0][a];
    return q;
  };
  return std::make_pair(point(-lo.value), point(hi.value));
}

RatMatrix projection_matrix(const SystemSpec& s, int level) {
  s.validate();
  require(level >= 0 && level + 1 <= max_level(s), "projection needs 0 <= k and k + 1 <= " + std::to_string(max_level(s)));
  const auto coarse = row_keys(s, level);
  const auto fine = row_keys(s, level + 1);
  const Rat weight(1, (s.sigma == Sigma::All ? s.n : s.m) - level);
  RatMatrix p(coarse.size(), fine.size());
  for (std::size_t r = 0; r < coarse.size(); ++r)
    for (std::size_t c = 0; c < fine.size(); ++c) {
      const auto& small = coarse[r];
      const auto& big = fine[c];
      bool extends = true;
      for (std::size_t a = 0; a < small.particles.size() && extends; ++a) {
        auto it = std::find(big.particles.begin(), big.particles.end(), small.particles[a]);
        extends = it != big.particles.end() && big.boxes[static_cast<std::size_t>(it - big.particles.begin())] == small.boxes[a];
      }
      if (extends) p(r, c) = weight;
    }
  ensure(multiply(p, restriction_matrix(s, level + 1)) == restriction_matrix(s, level),
         "projection does not map the finer restriction onto the coarser one");
  return p;
}

MarginalFamily simulate_game(const SystemSpec& s, std::span<const Rat> p, std::uint64_t rounds, std::uint64_t seed) {
  validate_distribution(s, p);
  require(rounds >= 1, "simulation needs at least one round");
  const auto arr = arrangements(s);
  Layout layout(s, s.k);
  Int den = 1;
  for (const Rat& q : p) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
  std::vector<Int> cumulative(p.size());
  Int run = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    run += p[i].get_num() * (den / p[i].get_den());
    cumulative[i] = run;
  }
  std::vector<std::vector<std::size_t>> incidence(arr.size());
  for (std::size_t a = 0; a < arr.size(); ++a) incidence[a] = layout.incidence(arr[a]);

  std::mt19937_64 gen(seed);
  std::vector<std::uint64_t> counts(layout.rows(), 0);
  for (std::uint64_t round = 0; round < rounds; ++round) {
    const Int u = uniform_below(gen, den);
    const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
    for (std::size_t r : incidence[static_cast<std::size_t>(it - cumulative.begin())]) ++counts[r];
  }
  MarginalFamily f{s, std::vector<Rat>(layout.rows())};
  const Int total_rounds = Int(std::to_string(rounds));
  for (std::size_t r = 0; r < counts.size(); ++r) {
    f.values[r] = Rat(Int(std::to_string(counts[r])), total_rounds);
    f.values[r].canonicalize();
  }
  return f;
}

Measure parse_distribution_file(const SystemSpec& s, std::string_view text) {
  const auto arr = arrangements(s);
  std::map<Arrangement, std::size_t> index;
  for (std::size_t i = 0; i < arr.size(); ++i) index.emplace(arr[i], i);
  Measure p(arr.size());
  std::vector<bool> seen(arr.size(), false);
  for (const auto& entry : textio::parse_assignments(text)) {
    Arrangement a;
    try {
      a = parse_arrangement(s, entry.key);
    } catch (const InvalidArgument& e) {
      throw InvalidArgument("line " + std::to_string(entry.line) + ": " + e.what());
    }
    const std::size_t i = index.at(a);
    require(!seen[i], "line " + std::to_string(entry.line) + ": arrangement '" + entry.key + "' listed twice");
    seen[i] = true;
    p[i] = textio::parse_rational_field(entry.value, entry.line);
  }
  return p;
}

std::string format_distribution(const SystemSpec& s, std::span<const Rat> p) {
  const auto arr = arrangements(s);
  require(p.size() == arr.size(), "measure length does not match the arrangement count");
  std::ostringstream os;
  for (std::size_t i = 0; i < arr.size(); ++i) os << arrangement_key(s, arr[i]) << " = " << to_string(p[i]) << '\n';
  return os.str();
}

MarginalFamily parse_family_file(const SystemSpec& s, std::string_view text) {
  const auto keys = row_keys(s, s.k);
  MarginalFamily f{s, std::vector<Rat>(keys.size())};
  std::vector<bool> seen(keys.size(), false);
  for (const auto& entry : textio::parse_assignments(text)) {
    RowKey key;
    try {
      key = parse_row_key(entry.key);
    } catch (const InvalidArgument& e) {
      throw InvalidArgument("line " + std::to_string(entry.line) + ": " + e.what());
    }
    auto it = std::lower_bound(keys.begin(), keys.end(), key);
    require(it != keys.end() && *it == key, "line " + std::to_string(entry.line) + ": '" + entry.key +
                                                "' is not a row of this system");
    const auto i = static_cast<std::size_t>(it - keys.begin());
    require(!seen[i], "line " + std::to_string(entry.line) + ": row '" + entry.key + "' listed twice");
    seen[i] = true;
    f.values[i] = textio::parse_rational_field(entry.value, entry.line);
  }
  for (std::size_t i = 0; i < keys.size(); ++i)
    require(seen[i], "family file is missing row '" + row_key_string(keys[i]) + "'");
  return f;
}

std::string format_family(const MarginalFamily& f) {
  const auto keys = row_keys(f.spec, f.spec.k);
  std::ostringstream os;
  for (std::size_t i = 0; i < keys.size(); ++i) os << row_key_string(keys[i]) << " = " << to_string(f.values[i]) << '\n';
  return os.str();
}

}  // namespace bincayley::particlebox
