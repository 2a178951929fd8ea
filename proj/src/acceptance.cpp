#include "bincayley/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "bincayley/cayley.hpp"
#include "bincayley/error.hpp"
#include "bincayley/exactla.hpp"
#include "bincayley/numeric.hpp"
#include "bincayley/particlebox.hpp"
#include "bincayley/partitions.hpp"
#include "bincayley/rsk.hpp"
#include "bincayley/spectra.hpp"

namespace bincayley::acceptance {

namespace {

using particlebox::Measure;
using particlebox::Sigma;
using particlebox::SystemSpec;
using partitions::Partition;

// Outcome of one criterion body: empty string means pass.
struct Check {
  std::vector<std::string> failures;
  std::uint64_t instances = 0;

  void expect(bool ok, const std::string& what) {
    ++instances;
    if (!ok && failures.size() < 5) failures.push_back(what);
    else if (!ok) failures.push_back("");
  }
};

RatMatrix rat_matrix(std::initializer_list<std::initializer_list<int>> rows) {
  RatMatrix m(rows.size(), rows.begin()->size());
  std::size_t r = 0;
  for (const auto& row : rows) {
    std::size_t c = 0;
    for (int v : row) m(r, c++) = v;
    ++r;
  }
  return m;
}

Measure ints(std::initializer_list<int> v) { return Measure(v.begin(), v.end()); }

Measure uniform(std::size_t count) { return Measure(count, Rat(1, static_cast<long>(count))); }

cayley::WeightFunction z4_weight(int k) {
  // w(0) = 4, w(+-1) = 7, w(2) = 9 on Z_4.
  const cayley::WeightFunction w(groups::CyclicPower{4, 1}, {4, 7, 9, 7});
  return cayley::binomial_transform(w, k);
}

void sym_spectra(Check& c, int max_m) {
  for (int m = 1; m <= max_m; ++m)
    for (int k = 0; k <= m; ++k) {
      const auto w = cayley::binomial_transform(cayley::natural_weight(groups::Symmetric{m}), k);
      const auto closed = spectra::sym_spectrum(m, k);
      const auto verified = spectra::verify_spectrum_exact(cayley::adjacency_matrix(w), closed);
      const std::string tag = "Sym(" + std::to_string(m) + ") k=" + std::to_string(k);
      c.expect(verified.ok, tag + ": " + verified.message);
      c.expect(spectra::same_spectrum(closed, spectra::generic_spectrum(w)), tag + ": closed form differs from character sums");
    }
}

void cyclic_spectra(Check& c, std::uint64_t max_order) {
  for (int m = 1; static_cast<std::uint64_t>(m) <= max_order; ++m)
    for (int n = 1; checked_pow(static_cast<std::uint64_t>(m), static_cast<unsigned>(n)) <= max_order; ++n) {
      for (int k = 0; k <= n; ++k) {
        const auto w = cayley::binomial_transform(cayley::natural_weight(groups::CyclicPower{m, n}), k);
        const auto closed = spectra::cyclic_spectrum(m, n, k);
        const auto verified = spectra::verify_spectrum_exact(cayley::adjacency_matrix(w), closed);
        const std::string tag = "(Z_" + std::to_string(m) + ")^" + std::to_string(n) + " k=" + std::to_string(k);
        c.expect(verified.ok, tag + ": " + verified.message);
        c.expect(spectra::same_spectrum(closed, spectra::generic_spectrum(w)), tag + ": closed form differs from character sums");
      }
      if (m == 1) break;
    }
}

void kernel_vs_lis(Check& c) {
  std::uint64_t small = 0;
  std::vector<int> perm{1, 2, 3, 4, 5};
  do {
    small += rsk::lis(perm) <= 2;
  } while (std::next_permutation(perm.begin(), perm.end()));
  c.expect(small == 42 && spectra::sym_kernel_dim(5, 2) == 42,
           "S_5, k=2: kernel " + std::to_string(spectra::sym_kernel_dim(5, 2)) + ", lis<=2 count " + std::to_string(small));
  for (int m = 1; m <= 7; ++m) {
    const auto dist = rsk::lis_distribution(m);
    for (int k = 0; k <= m; ++k) {
      std::uint64_t below = 0;
      for (int t = 0; t <= m - k - 1; ++t) below += dist[t];
      c.expect(spectra::sym_kernel_dim(m, k) == below,
               "m=" + std::to_string(m) + " k=" + std::to_string(k) + ": kernel " +
                   std::to_string(spectra::sym_kernel_dim(m, k)) + " vs lis count " + std::to_string(below));
    }
  }
}

void recursion(Check& c) {
  for (int m = 1; m <= 5; ++m)
    for (int n = 1; n <= 8; ++n)
      for (int k = 1; k <= n; ++k) {
        const auto a = spectra::rank_recursion(n, m, k);
        const auto b = spectra::cyclic_rank(m, n, k);
        c.expect(a == b, "m=" + std::to_string(m) + " n=" + std::to_string(n) + " k=" + std::to_string(k) + ": " +
                             std::to_string(a) + " vs " + std::to_string(b));
      }
}

void worked_matrices(Check& c) {
  const RatMatrix m1 = rat_matrix({{1, 1, 0, 0}, {0, 0, 1, 1}, {1, 0, 1, 0}, {0, 1, 0, 1}});
  c.expect(particlebox::restriction_matrix({2, 2, 1, Sigma::All}) == m1, "4x4 restriction matrix differs");
  const RatMatrix m2 = rat_matrix({{1, 1, 0, 0, 0, 0, 0, 0},
                                   {0, 0, 1, 1, 0, 0, 0, 0},
                                   {0, 0, 0, 0, 1, 1, 0, 0},
                                   {0, 0, 0, 0, 0, 0, 1, 1},
                                   {1, 0, 1, 0, 0, 0, 0, 0},
                                   {0, 1, 0, 1, 0, 0, 0, 0},
                                   {0, 0, 0, 0, 1, 0, 1, 0},
                                   {0, 0, 0, 0, 0, 1, 0, 1},
                                   {1, 0, 0, 0, 1, 0, 0, 0},
                                   {0, 1, 0, 0, 0, 1, 0, 0},
                                   {0, 0, 1, 0, 0, 0, 1, 0},
                                   {0, 0, 0, 1, 0, 0, 0, 1}});
  const RatMatrix built = particlebox::restriction_matrix({3, 2, 2, Sigma::All});
  c.expect(built == m2, "12x8 restriction matrix differs");
  c.expect(exactla::rank_nullity(built).rank == 7, "12x8 restriction matrix rank is not 7");
  const auto kernel = exactla::kernel_basis(built);
  c.expect(kernel.size() == 1 && kernel[0] == ints({1, -1, -1, 1, -1, 1, 1, -1}), "12x8 kernel vector differs");
}

void degeneracy_examples(Check& c) {
  const SystemSpec s{2, 2, 1, Sigma::All};
  c.expect(particlebox::degeneracy(s, ints({1, 0, 0, 0})) == 0, "degeneracy of e1 is not 0");
  const Measure u = uniform(4);
  c.expect(particlebox::degeneracy(s, u) == 1, "degeneracy of the uniform distribution is not 1");
  const auto ends = particlebox::segment_endpoints(s, u);
  const Measure a{Rat(0), Rat(1, 2), Rat(1, 2), Rat(0)}, b{Rat(1, 2), Rat(0), Rat(0), Rat(1, 2)};
  c.expect(ends && ((ends->first == a && ends->second == b) || (ends->first == b && ends->second == a)),
           "boundary points of the uniform fiber differ");
  c.expect(particlebox::degeneracy({2, 2, 1, Sigma::Bij}, ints({1, 0})) == 0, "Bij m=2 identity degeneracy is not 0");
  c.expect(particlebox::degeneracy({3, 2, 2, Sigma::All}, uniform(8)) == 1, "n=3 m=2 k=2 uniform degeneracy is not 1");
}

particlebox::MarginalFamily counterexample_family() {
  // Same 2-marginal on every pair: AA = 1/12, AB = BA = 11/30, BB = 11/60.
  const SystemSpec s{3, 2, 2, Sigma::All};
  particlebox::MarginalFamily f{s, {}};
  for (int pair = 0; pair < 3; ++pair)
    for (const Rat& v : {Rat(1, 12), Rat(11, 30), Rat(11, 30), Rat(11, 60)}) f.values.push_back(v);
  return f;
}

void not_observable(Check& c) {
  const auto f = counterexample_family();
  c.expect(particlebox::compatibility_check(f).compatible, "family is not compatible");
  const auto report = particlebox::observability_check(f);
  c.expect(report.verdict == particlebox::Verdict::NoNonnegativeSolution,
           "verdict is " + particlebox::verdict_name(report.verdict));
  if (report.verdict != particlebox::Verdict::NoNonnegativeSolution) return;
  // Certificate: y = M^T z >= 0 but z . family < 0, so no p >= 0 has M p = family.
  const RatMatrix mt = transpose(particlebox::restriction_matrix(f.spec));
  const auto y = multiply(mt, report.family_multipliers);
  Rat pairing = 0;
  for (std::size_t i = 0; i < f.values.size(); ++i) pairing += report.family_multipliers[i] * f.values[i];
  const bool nonneg = std::all_of(y.begin(), y.end(), [](const Rat& v) { return sgn(v) >= 0; });
  c.expect(nonneg && y == report.farkas && sgn(pairing) < 0, "infeasibility certificate does not check");
  const auto fq = particlebox::fiber_query(f.spec, report.signed_solution);
  c.expect(exactla::check_farkas(fq.query, report.farkas), "fiber certificate does not check");
}

void nesting_for(Check& c, const SystemSpec& base) {
  const int top = base.sigma == Sigma::All ? base.n : base.m;
  for (int level = 0; level + 1 <= top; ++level) {
    SystemSpec s = base;
    s.k = level;
    const RatMatrix p = particlebox::projection_matrix(s, level);
    const RatMatrix coarse = particlebox::restriction_matrix(s, level);
    const RatMatrix fine = particlebox::restriction_matrix(s, level + 1);
    const std::string tag = particlebox::sigma_name(s.sigma) + " n=" + std::to_string(s.n) + " m=" +
                            std::to_string(s.m) + " k=" + std::to_string(level);
    c.expect(multiply(p, fine) == coarse, tag + ": M^k != P M^(k+1)");
    for (const auto& v : exactla::kernel_basis(fine)) {
      const auto image = multiply(coarse, v);
      c.expect(std::all_of(image.begin(), image.end(), [](const Rat& x) { return sgn(x) == 0; }),
               tag + ": kernel vector of M^(k+1) outside ker M^k");
    }
  }
}

void nested_kernels(Check& c) {
  const auto d1 = exactla::determinant(to_rational(cayley::adjacency_matrix(z4_weight(1))));
  const auto d2 = exactla::determinant(to_rational(cayley::adjacency_matrix(z4_weight(2))));
  c.expect(sgn(d1) != 0, "k=1 adjacency is singular");
  c.expect(sgn(d2) == 0, "k=2 adjacency is not singular, det " + to_string(d2));
  c.expect(exactla::rank_nullity(cayley::adjacency_matrix(z4_weight(2))).nullity == 1, "k=2 adjacency nullity is not 1");
  for (int n = 1; n <= 4; ++n)
    for (int m = 1; m <= 3; ++m) nesting_for(c, {n, m, 0, Sigma::All});
  for (int m = 1; m <= 5; ++m) nesting_for(c, {m, m, 0, Sigma::Bij});
}

void lemmas(Check& c) {
  for (const auto& r : spectra::lemma_suite(spectra::LemmaBounds{})) {
    c.expect(r.instances > 0, r.name + ": no instances");
    c.expect(r.failures == 0, r.name + ": " + std::to_string(r.failures) + " failures, first " + r.first_failure);
  }
}

// Standard fillings of the skew shape mu / (m - k), counted by trying every labelling.
std::uint64_t skew_syt_brute_force(const Partition& mu, int k) {
  const int inner = mu.weight() - k;
  if (mu.part(0) < inner) return 0;
  std::vector<std::pair<int, int>> cells;
  for (int r = 0; r < mu.length(); ++r)
    for (int col = r == 0 ? inner : 0; col < mu.part(r); ++col) cells.emplace_back(r, col);
  std::vector<int> label(cells.size());
  std::iota(label.begin(), label.end(), 1);
  std::map<std::pair<int, int>, std::size_t> where;
  for (std::size_t i = 0; i < cells.size(); ++i) where[cells[i]] = i;
  std::uint64_t count = 0;
  do {
    bool ok = true;
    for (std::size_t i = 0; i < cells.size() && ok; ++i) {
      auto [r, col] = cells[i];
      if (auto it = where.find({r, col + 1}); it != where.end()) ok = label[it->second] > label[i];
      if (auto it = where.find({r + 1, col}); ok && it != where.end()) ok = label[it->second] > label[i];
    }
    count += ok;
  } while (std::next_permutation(label.begin(), label.end()));
  return count;
}

void characters(Check& c) {
  for (int m = 1; m <= 6; ++m) {
    const groups::GroupSpec g = groups::Symmetric{m};
    const auto classes = groups::conjugacy_classes(g);
    const auto labels = groups::irreducible_labels(g);
    const std::int64_t order = static_cast<std::int64_t>(groups::order(g));
    std::vector<std::vector<std::int64_t>> table;
    for (const auto& l : labels) {
      std::vector<std::int64_t> row;
      for (const auto& cls : classes) row.push_back(std::get<std::int64_t>(groups::character_value(g, l, cls)));
      table.push_back(std::move(row));
    }
    std::int64_t degree_sum = 0;
    for (std::size_t a = 0; a < labels.size(); ++a) {
      degree_sum += table[a][classes.size() - 1] * table[a][classes.size() - 1];
      for (std::size_t b = 0; b < labels.size(); ++b) {
        std::int64_t s = 0;
        for (std::size_t j = 0; j < classes.size(); ++j)
          s += static_cast<std::int64_t>(classes[j].size) * table[a][j] * table[b][j];
        c.expect(s == (a == b ? order : 0), "Sym(" + std::to_string(m) + ") row orthogonality fails");
      }
    }
    c.expect(degree_sum == order, "Sym(" + std::to_string(m) + ") degree sum is " + std::to_string(degree_sum));
  }
  for (int m = 1; m <= 6; ++m)
    for (int n = 1; n <= 2; ++n) {
      const groups::GroupSpec g = groups::CyclicPower{m, n};
      const auto elems = groups::elements(g);
      for (const auto& y1 : elems)
        for (const auto& y2 : elems) {
          CyclotomicValue s(m);
          for (const auto& x : elems)
            s += groups::cyclic_character(m, y1, x) * groups::cyclic_character(m, y2, x).conjugate();
          const auto v = s.as_integer();
          c.expect(v && *v == (y1 == y2 ? static_cast<std::int64_t>(elems.size()) : 0),
                   groups::describe(g) + " character orthogonality fails");
        }
    }
  for (int m = 1; m <= 7; ++m)
    for (const auto& mu : partitions::enumerate_partitions(m))
      for (int k = 0; k <= m; ++k)
        c.expect(partitions::crop(mu, k) == skew_syt_brute_force(mu, k),
                 "crop(" + mu.to_string() + ", " + std::to_string(k) + ") differs from the skew tableau count");
  for (int m = 2; m <= 6; ++m) {
    const auto coeffs = spectra::decompose_class_function(cayley::natural_weight(groups::Symmetric{m}));
    const std::string top = std::to_string(m), hook = std::to_string(m - 1) + ",1";
    for (const auto& a : coeffs) {
      const Rat want = (a.label == top || a.label == hook) ? Rat(1) : Rat(0);
      c.expect(a.value == want, "Sym(" + std::to_string(m) + ") fixed-point coefficient at " + a.label + " is " +
                                    to_string(a.value));
    }
  }
}

void simulator(Check& c) {
  const SystemSpec s{2, 2, 1, Sigma::All};
  const Measure u = uniform(4);
  const auto a = particlebox::simulate_game(s, u, 100000, 20240601);
  const auto b = particlebox::simulate_game(s, u, 100000, 20240601);
  c.expect(a.values == b.values, "same seed gave different tallies");
  const auto exact = particlebox::restrict(s, u);
  Rat worst = 0;
  for (std::size_t i = 0; i < exact.values.size(); ++i) worst = std::max(worst, Rat(abs(a.values[i] - exact.values[i])));
  c.expect(worst <= Rat(1, 50), "largest deviation " + to_string(worst) + " exceeds 1/50");
  const SystemSpec t{3, 3, 2, Sigma::Bij};
  Measure delta(6);
  delta[3] = 1;
  c.expect(particlebox::simulate_game(t, delta, 257, 7).values == particlebox::restrict(t, delta).values,
           "point mass simulation differs from its restriction");
}

struct Criterion {
  int id;
  const char* name;
  std::function<void(Check&)> body;
};

}  // namespace

std::vector<CriterionResult> run_acceptance(const Options& options) {
  const std::vector<Criterion> criteria{
      {1, "sym-spectrum", [&](Check& c) { sym_spectra(c, options.slow ? 6 : 5); }},
      {2, "cyclic-spectrum", [](Check& c) { cyclic_spectra(c, 1024); }},
      {3, "kernel-vs-lis", kernel_vs_lis},
      {4, "rank-recursion", recursion},
      {5, "worked-matrices", worked_matrices},
      {6, "degeneracy", degeneracy_examples},
      {7, "compatible-not-observable", not_observable},
      {8, "nested-kernels", nested_kernels},
      {9, "identity-suites", lemmas},
      {10, "characters", characters},
      {11, "simulator", simulator},
  };
  std::vector<CriterionResult> out;
  for (const auto& cr : criteria) {
    CriterionResult r{cr.id, cr.name, false, "", 0};
    const auto start = std::chrono::steady_clock::now();
    Check c;
    try {
      cr.body(c);
      r.passed = c.failures.empty();
      std::ostringstream os;
      os << c.instances << " checks";
      if (!c.failures.empty()) os << ", " << c.failures.size() << " failed; first: " << c.failures.front();
      r.detail = os.str();
    } catch (const std::exception& e) {
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.push_back(std::move(r));
  }
  return out;
}

std::string format_line(const CriterionResult& r) {
  char time[32];
  std::snprintf(time, sizeof time, "%.2fs", r.seconds);
  return std::string(r.passed ? "[PASS] " : "[FAIL] ") + std::to_string(r.id) + " " + r.name + ": " + r.detail +
         " (" + time + ")";
}

}  // namespace bincayley::acceptance
