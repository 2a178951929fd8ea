#include "bincayley/spectra.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "bincayley/exactla.hpp"
#include "bincayley/numeric.hpp"
#include "bincayley/partitions.hpp"

namespace bincayley::spectra {

using groups::CyclicPower;
using groups::GroupElement;
using groups::Symmetric;
using partitions::Partition;

namespace {

// Character sums over (Z_m)^n are quadratic in the group order.
constexpr std::uint64_t kMaxCharacterSumOrder = 4096;

Int binom(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Int ipow(long base, unsigned long e) {
  Int r;
  Int b = base;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

std::uint64_t to_u64(const Int& z) {
  require(z >= 0 && mpz_sizeinbase(z.get_mpz_t(), 2) <= 64, "count does not fit in 64 bits");
  std::uint64_t v = 0;
  mpz_export(&v, nullptr, -1, sizeof(v), 0, 0, z.get_mpz_t());
  return v;
}

struct Contribution {
  Rat eigenvalue;
  std::uint64_t multiplicity;
  std::string label;
};

SpectrumReport assemble(std::string group, std::uint64_t group_order, const std::vector<Contribution>& parts) {
  std::map<Rat, SpectrumEntry, std::greater<>> merged;
  for (const auto& c : parts) {
    if (c.multiplicity == 0) continue;
    auto& e = merged[c.eigenvalue];
    e.eigenvalue = c.eigenvalue;
    e.multiplicity = checked_add(e.multiplicity, c.multiplicity);
    e.contributors.push_back(c.label);
  }
  SpectrumReport r;
  r.group = std::move(group);
  r.group_order = group_order;
  for (auto& [_, e] : merged) r.entries.push_back(std::move(e));
  return r;
}

void check_sym_args(int m, int k) {
  require(m >= 1, "Sym spectrum needs m >= 1");
  require(k >= 0 && k <= m, "Sym spectrum needs 0 <= k <= m");
  if (m > partitions::kMaxWeight)
    throw SizeLimitExceeded("Sym spectrum supports m <= " + std::to_string(partitions::kMaxWeight));
}

void check_cyclic_args(int m, int n, int k) {
  require(m >= 1 && n >= 1, "cyclic spectrum needs m >= 1 and n >= 1");
  require(k >= 0 && k <= n, "cyclic spectrum needs 0 <= k <= n");
  groups::validate(CyclicPower{m, n});
}

void check_character_sum_order(const groups::GroupSpec& g) {
  if (groups::order(g) > kMaxCharacterSumOrder)
    throw SizeLimitExceeded("character sums over " + groups::describe(g) + " exceed the order limit " +
                            std::to_string(kMaxCharacterSumOrder));
}

// sum_x w(x) z^{sign * y.x} as an exact cyclotomic value.
CyclotomicValue cyclic_weighted_sum(const cayley::WeightFunction& w, const CyclicPower& c,
                                    const std::vector<GroupElement>& elems, const GroupElement& y, int sign) {
  CyclotomicValue acc(c.m);
  const auto& values = w.class_values();
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (values[i] == 0) continue;
    acc.add_power(sign * groups::dot_mod(c.m, y, elems[i]), static_cast<std::int64_t>(values[i]));
  }
  return acc;
}

Int sym_class_sum(const cayley::WeightFunction& w, const Partition& mu) {
  Int s = 0;
  for (std::size_t i = 0; i < w.classes().size(); ++i) {
    const auto& cls = w.classes()[i];
    if (w.class_values()[i] == 0) continue;
    Int term = to_int(partitions::mn_character(mu, cls.cycle_type));
    term *= Int(std::to_string(cls.size));
    term *= Int(std::to_string(w.class_values()[i]));
    s += term;
  }
  return s;
}

std::int64_t require_integral(const CyclotomicValue& v, const std::string& where) {
  auto i = v.as_integer();
  if (!i) throw IrrationalSpectrum(where + " is not rational: " + v.to_string());
  return *i;
}

}  // namespace

std::uint64_t SpectrumReport::multiplicity(const Rat& eigenvalue) const {
  for (const auto& e : entries)
    if (e.eigenvalue == eigenvalue) return e.multiplicity;
  return 0;
}

bool same_spectrum(const SpectrumReport& a, const SpectrumReport& b) {
  if (a.group_order != b.group_order || a.entries.size() != b.entries.size()) return false;
  for (std::size_t i = 0; i < a.entries.size(); ++i) {
    const auto& x = a.entries[i];
    const auto& y = b.entries[i];
    if (x.eigenvalue != y.eigenvalue || x.multiplicity != y.multiplicity || x.contributors != y.contributors)
      return false;
  }
  return true;
}

SpectrumReport generic_spectrum(const cayley::WeightFunction& w) {
  const auto& g = w.group();
  std::vector<Contribution> parts;
  if (const auto* s = std::get_if<Symmetric>(&g)) {
    const Partition id = Partition(std::vector<int>(s->m, 1));
    for (const Partition& mu : partitions::enumerate_partitions(s->m)) {
      const std::int64_t dim = partitions::mn_character(mu, id);
      Rat lambda(sym_class_sum(w, mu), to_int(dim));
      lambda.canonicalize();
      parts.push_back({lambda, checked_mul(static_cast<std::uint64_t>(dim), static_cast<std::uint64_t>(dim)),
                       mu.to_string()});
    }
  } else {
    const auto& c = std::get<CyclicPower>(g);
    check_character_sum_order(g);
    const auto elems = groups::elements(g);
    for (const GroupElement& y : elems) {
      const std::string label = groups::element_label(g, y);
      const std::int64_t lambda = require_integral(cyclic_weighted_sum(w, c, elems, y, 1), "eigenvalue of " + label);
      parts.push_back({to_rat(lambda), 1, label});
    }
  }
  return assemble(groups::describe(g), groups::order(g), parts);
}

SpectrumReport sym_spectrum(int m, int k) {
  check_sym_args(m, k);
  const Int top = Int(std::to_string(factorial(static_cast<unsigned>(m)))) /
                  Int(std::to_string(factorial(static_cast<unsigned>(k))));  // C(m,k) (m-k)!
  std::vector<Contribution> parts;
  for (const Partition& mu : partitions::enumerate_partitions(m)) {
    const std::uint64_t f = partitions::syt_count(mu);
    const Int num = top * Int(std::to_string(partitions::crop(mu, k)));
    ensure(num % Int(std::to_string(f)) == 0, "Sym eigenvalue for " + mu.to_string() + " is not an integer");
    const Int lambda = num / Int(std::to_string(f));
    ensure(lambda >= 0 && lambda <= top, "Sym eigenvalue for " + mu.to_string() + " out of range");
    parts.push_back({Rat(lambda), checked_mul(f, f), mu.to_string()});
  }
  return assemble(groups::describe(Symmetric{m}), factorial(static_cast<unsigned>(m)), parts);
}

SpectrumReport cyclic_spectrum(int m, int n, int k) {
  check_cyclic_args(m, n, k);
  const groups::GroupSpec g = CyclicPower{m, n};
  const std::uint64_t order = groups::order(g);
  std::vector<Contribution> parts;
  auto eigenvalue = [&](int t) { return Rat(ipow(m, static_cast<unsigned long>(n - k)) * binom(t, n - k)); };
  if (order <= groups::kMaxGroupOrder) {
    for (const GroupElement& y : groups::elements(g))
      parts.push_back({eigenvalue(groups::zero_count(y)), 1, groups::element_label(g, y)});
  } else {
    for (int t = 0; t <= n; ++t) {
      const Int mult = binom(n, t) * ipow(m - 1, static_cast<unsigned long>(n - t));
      parts.push_back({eigenvalue(t), to_u64(mult), "zeros=" + std::to_string(t)});
    }
  }
  SpectrumReport r = assemble(groups::describe(g), order, parts);
  // Closed-form multiplicities per zero count.
  for (int t = 0; t <= n; ++t) {
    const Int mult = binom(n, t) * ipow(m - 1, static_cast<unsigned long>(n - t));
    if (mult == 0) continue;
    std::uint64_t expected = 0;
    for (int t2 = 0; t2 <= n; ++t2)
      if (eigenvalue(t2) == eigenvalue(t)) expected += to_u64(binom(n, t2) * ipow(m - 1, static_cast<unsigned long>(n - t2)));
    ensure(r.multiplicity(eigenvalue(t)) == expected, "cyclic multiplicities disagree with the closed form");
  }
  return r;
}

std::uint64_t sym_kernel_dim(int m, int k) {
  check_sym_args(m, k);
  std::uint64_t total = 0;
  for (const Partition& mu : partitions::enumerate_partitions(m)) {
    if (mu.part(0) >= m - k) continue;
    const std::uint64_t f = partitions::syt_count(mu);
    total = checked_add(total, checked_mul(f, f));
  }
  return total;
}

std::uint64_t sym_rank(int m, int k) { return factorial(static_cast<unsigned>(m)) - sym_kernel_dim(m, k); }

std::uint64_t cyclic_rank(int m, int n, int k) {
  check_cyclic_args(m, n, k);
  Int total = 0;
  for (int s = 0; s <= k; ++s) total += binom(n, s) * ipow(m - 1, static_cast<unsigned long>(s));
  return to_u64(total);
}

std::uint64_t cyclic_kernel_dim(int m, int n, int k) {
  return groups::order(CyclicPower{m, n}) - cyclic_rank(m, n, k);
}

std::uint64_t rank_recursion(int n, int m, int k) {
  check_cyclic_args(m, n, k);
  std::map<std::pair<int, int>, std::uint64_t> memo;
  std::function<std::uint64_t(int, int)> r = [&](int nn, int kk) -> std::uint64_t {
    if (kk == 0) return 1;
    auto key = std::make_pair(nn, kk);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const std::uint64_t inner = checked_pow(static_cast<std::uint64_t>(m), static_cast<unsigned>(kk)) - r(kk, kk - 1);
    const std::uint64_t v = checked_add(r(nn, kk - 1), checked_mul(binomial(nn, kk), inner));
    memo.emplace(key, v);
    return v;
  };
  return r(n, k);
}

VerificationReport verify_spectrum_exact(const IntMatrix& a, const SpectrumReport& claimed) {
  require(a.rows() == a.cols(), "spectrum verification needs a square matrix");
  std::uint64_t total = 0;
  for (const auto& e : claimed.entries) total = checked_add(total, e.multiplicity);
  require(total == a.rows(), "claimed multiplicities sum to " + std::to_string(total) + ", matrix dimension is " +
                                 std::to_string(a.rows()));
  VerificationReport out;
  out.ok = true;
  for (const auto& e : claimed.entries) {
    // den * A - num * I has the same kernel as A - lambda * I.
    require(fits_int64(e.eigenvalue.get_num()) && fits_int64(e.eigenvalue.get_den()),
            "eigenvalue " + to_string(e.eigenvalue) + " too large to verify");
    const std::int64_t num = to_int64(e.eigenvalue.get_num());
    const std::int64_t den = to_int64(e.eigenvalue.get_den());
    IntMatrix b(a.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
      for (std::size_t c = 0; c < a.cols(); ++c) {
        std::int64_t v;
        if (__builtin_mul_overflow(a(r, c), den, &v) || (r == c && __builtin_sub_overflow(v, num, &v)))
          throw_invalid("matrix entries too large to verify eigenvalue " + to_string(e.eigenvalue));
        b(r, c) = v;
      }
    const std::uint64_t nullity = exactla::rank_nullity(b).nullity;
    out.checks.push_back({e.eigenvalue, e.multiplicity, nullity});
    if (nullity != e.multiplicity && out.ok) {
      out.ok = false;
      out.message = "eigenvalue " + to_string(e.eigenvalue) + ": claimed multiplicity " +
                    std::to_string(e.multiplicity) + ", exact nullity " + std::to_string(nullity);
    }
  }
  return out;
}

namespace {

LemmaResult lemma_alternating_binomial(int bound) {
  LemmaResult r{"alternating binomial sum", 0, 0, ""};
  for (int big_m = 0; big_m <= bound; ++big_m)
    for (int big_n = 0; big_n <= bound; ++big_n)
      for (int k = 0; k <= bound; ++k) {
        if (big_m + k < big_n) continue;
        Int lhs = 0;
        for (int p = 0; p <= big_m; ++p) {
          Int term = binom(big_n, p) * binom(k + big_m - p, big_m - p);
          lhs += (p % 2 == 0) ? term : Int(-term);
        }
        const Int rhs = binom(k - big_n + big_m, big_m);
        ++r.instances;
        if (lhs != rhs && r.failures++ == 0) {
          std::ostringstream os;
          os << "M=" << big_m << " N=" << big_n << " k=" << k << ": " << lhs << " != " << rhs;
          r.first_failure = os.str();
        }
      }
  return r;
}

LemmaResult lemma_nonzero_character_sum(int max_m) {
  LemmaResult r{"character sum over nonzero residues", 0, 0, ""};
  for (int m = 1; m <= max_m; ++m)
    for (int y = 0; y < m; ++y) {
      CyclotomicValue s(m);
      for (int x = 1; x < m; ++x) s.add_power(static_cast<std::int64_t>(y) * x, 1);
      const std::int64_t expected = y == 0 ? m - 1 : -1;
      ++r.instances;
      if (!(s == CyclotomicValue::integer(m, expected)) && r.failures++ == 0)
        r.first_failure = "m=" + std::to_string(m) + " y=" + std::to_string(y) + ": " + s.to_string();
    }
  return r;
}

LemmaResult lemma_zero_count_character_sum(int max_order) {
  LemmaResult r{"character sum over a zero-count shell", 0, 0, ""};
  for (int m = 2; m <= max_order; ++m)
    for (int n = 1; ipow(m, static_cast<unsigned long>(n)) <= max_order; ++n) {
      const groups::GroupSpec g = CyclicPower{m, n};
      const auto elems = groups::elements(g);
      for (const GroupElement& y : elems) {
        const int t = groups::zero_count(y);
        std::vector<CyclotomicValue> shell(static_cast<std::size_t>(n) + 1, CyclotomicValue(m));
        for (const GroupElement& x : elems) shell[groups::zero_count(x)].add_power(groups::dot_mod(m, y, x), 1);
        for (int z = 0; z <= n; ++z) {
          Int rhs = 0;
          for (int l = 0; l <= n - z; ++l) {
            Int term = ipow(m - 1, static_cast<unsigned long>(l)) * binom(t, l) * binom(n - t, n - z - l);
            rhs += ((n - z - l) % 2 == 0) ? term : Int(-term);
          }
          ++r.instances;
          const auto lhs = shell[z].as_integer();
          if ((!lhs || to_int(*lhs) != rhs) && r.failures++ == 0)
            r.first_failure = "m=" + std::to_string(m) + " y=" + groups::element_label(g, y) +
                              " z=" + std::to_string(z) + ": " + shell[z].to_string() + " != " + rhs.get_str();
        }
      }
    }
  return r;
}

struct SymTable {
  std::vector<Partition> irreps;
  std::vector<std::vector<std::int64_t>> chi;  // chi[class][irrep]
};

SymTable sym_table(int m) {
  SymTable t;
  t.irreps = partitions::enumerate_partitions(m);
  for (const Partition& rho : t.irreps) {
    std::vector<std::int64_t> row;
    for (const Partition& mu : t.irreps) row.push_back(partitions::mn_character(mu, rho));
    t.chi.push_back(std::move(row));
  }
  return t;
}

void sym_lemmas(int max_m, LemmaResult& change, LemmaResult& subgroup) {
  for (int m = 1; m <= max_m; ++m) {
    const groups::GroupSpec g = Symmetric{m};
    const SymTable table = sym_table(m);
    const std::size_t nirr = table.irreps.size();
    // full[f][mu]: sum over S_m with exactly f fixed points.
    // sub[k][f][mu]: same sum restricted to permutations fixing m-k+1..m.
    std::vector<std::vector<Int>> full(m + 1, std::vector<Int>(nirr));
    std::vector<std::vector<std::vector<Int>>> sub(m + 1, full);
    for (const GroupElement& s : groups::elements(g)) {
      const int f = groups::fixed_points(s);
      int top_fixed = 0;
      while (top_fixed < m && s.entries[m - 1 - top_fixed] == m - top_fixed) ++top_fixed;
      const auto& chi = table.chi[groups::class_index(g, s)];
      for (std::size_t i = 0; i < nirr; ++i) {
        full[f][i] += to_int(chi[i]);
        for (int k = 0; k <= top_fixed; ++k) sub[k][f][i] += to_int(chi[i]);
      }
    }
    for (int k = 0; k <= m; ++k)
      for (std::size_t i = 0; i < nirr; ++i) {
        for (int f = k; f <= m; ++f) {
          ++change.instances;
          if (full[f][i] * binom(f, k) != sub[k][f][i] * binom(m, k) && change.failures++ == 0)
            change.first_failure = "m=" + std::to_string(m) + " k=" + std::to_string(k) + " f=" +
                                   std::to_string(f) + " mu=" + table.irreps[i].to_string();
        }
        Int total = 0;
        for (int f = 0; f <= m; ++f) total += sub[k][f][i];
        const Int expected = Int(std::to_string(factorial(static_cast<unsigned>(m - k)))) *
                             Int(std::to_string(partitions::crop(table.irreps[i], k)));
        ++subgroup.instances;
        if (total != expected && subgroup.failures++ == 0)
          subgroup.first_failure = "m=" + std::to_string(m) + " k=" + std::to_string(k) +
                                   " mu=" + table.irreps[i].to_string() + ": " + total.get_str() +
                                   " != " + expected.get_str();
      }
  }
}

}  // namespace

std::vector<LemmaResult> lemma_suite(const LemmaBounds& bounds) {
  require(bounds.generating_max >= 0 && bounds.cyclic_max_m >= 1 && bounds.cyclic_max_order >= 1 &&
              bounds.sym_max_m >= 1,
          "lemma bounds must be positive");
  if (bounds.sym_max_m > 8 || bounds.cyclic_max_order > static_cast<int>(kMaxCharacterSumOrder))
    throw SizeLimitExceeded("lemma bounds exceed the enumeration limits");
  std::vector<LemmaResult> out;
  out.push_back(lemma_alternating_binomial(bounds.generating_max));
  out.push_back(lemma_nonzero_character_sum(bounds.cyclic_max_m));
  out.push_back(lemma_zero_count_character_sum(bounds.cyclic_max_order));
  LemmaResult change{"fixed-point character sums under a subgroup", 0, 0, ""};
  LemmaResult subgroup{"subgroup character sum equals factorial times crop", 0, 0, ""};
  sym_lemmas(bounds.sym_max_m, change, subgroup);
  out.push_back(std::move(change));
  out.push_back(std::move(subgroup));
  return out;
}

std::vector<Coefficient> decompose_class_function(const cayley::WeightFunction& w) {
  const auto& g = w.group();
  const Int order = Int(std::to_string(groups::order(g)));
  std::vector<Coefficient> out;
  if (const auto* s = std::get_if<Symmetric>(&g)) {
    // Characters of Sym(m) are real, so the inner product needs no conjugation.
    for (const Partition& mu : partitions::enumerate_partitions(s->m)) {
      Rat a(sym_class_sum(w, mu), order);
      a.canonicalize();
      out.push_back({mu.to_string(), a});
    }
    return out;
  }
  const auto& c = std::get<CyclicPower>(g);
  check_character_sum_order(g);
  const auto elems = groups::elements(g);
  for (const GroupElement& y : elems) {
    const std::string label = groups::element_label(g, y);
    Rat a(to_int(require_integral(cyclic_weighted_sum(w, c, elems, y, -1), "coefficient of " + label)), order);
    a.canonicalize();
    out.push_back({label, a});
  }
  return out;
}

AbelianEigenvector abelian_eigenvector(const cayley::WeightFunction& w, const GroupElement& y) {
  const auto* c = std::get_if<CyclicPower>(&w.group());
  require(c != nullptr, "abelian eigenvectors need a CyclicPower group");
  require(groups::is_element(w.group(), y), "character label is not an element of " + groups::describe(w.group()));
  check_character_sum_order(w.group());
  const auto elems = groups::elements(w.group());
  const std::int64_t lambda =
      require_integral(cyclic_weighted_sum(w, *c, elems, y, 1), "eigenvalue of " + groups::element_label(w.group(), y));

  AbelianEigenvector out;
  out.eigenvalue = to_rat(lambda);
  out.entries.reserve(elems.size());
  for (const GroupElement& x : elems) out.entries.push_back(CyclotomicValue::root_power(c->m, -groups::dot_mod(c->m, y, x)));

  const IntMatrix a = cayley::adjacency_matrix(w);
  out.verified = true;
  for (std::size_t gi = 0; gi < elems.size() && out.verified; ++gi) {
    CyclotomicValue row(c->m);
    for (std::size_t h = 0; h < elems.size(); ++h)
      if (a(gi, h) != 0) row.add_power(-groups::dot_mod(c->m, y, elems[h]), a(gi, h));
    CyclotomicValue rhs = out.entries[gi];
    rhs *= lambda;
    out.verified = row == rhs;
  }
  return out;
}

}  // namespace bincayley::spectra
