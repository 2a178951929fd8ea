#include "bincayley/groups.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "bincayley/error.hpp"
#include "bincayley/numeric.hpp"

namespace bincayley::groups {

namespace {

template <class... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

const std::vector<Partition>& partitions_of(int m) {
  thread_local std::map<int, std::vector<Partition>> cache;
  auto it = cache.find(m);
  if (it == cache.end()) it = cache.emplace(m, partitions::enumerate_partitions(m)).first;
  return it->second;
}

}  // namespace

void validate(const GroupSpec& g) {
  std::visit(Overloaded{
                 [](const Symmetric& s) {
                   require(s.m >= 1, "Sym(m) requires m >= 1");
                   if (s.m > partitions::kMaxWeight)
                     throw SizeLimitExceeded("Sym(m) supports m <= " + std::to_string(partitions::kMaxWeight));
                 },
                 [](const CyclicPower& c) {
                   require(c.m >= 1, "CyclicPower(m,n) requires m >= 1");
                   require(c.n >= 1, "CyclicPower(m,n) requires n >= 1");
                   (void)checked_pow(static_cast<std::uint64_t>(c.m), static_cast<unsigned>(c.n));
                 },
             },
             g);
}

std::uint64_t order(const GroupSpec& g) {
  validate(g);
  return std::visit(Overloaded{
                        [](const Symmetric& s) { return factorial(static_cast<unsigned>(s.m)); },
                        [](const CyclicPower& c) {
                          return checked_pow(static_cast<std::uint64_t>(c.m), static_cast<unsigned>(c.n));
                        },
                    },
                    g);
}

std::string describe(const GroupSpec& g) {
  return std::visit(Overloaded{
                        [](const Symmetric& s) { return "Sym(" + std::to_string(s.m) + ")"; },
                        [](const CyclicPower& c) {
                          return "CyclicPower(" + std::to_string(c.m) + "," + std::to_string(c.n) + ")";
                        },
                    },
                    g);
}

bool is_element(const GroupSpec& g, const GroupElement& a) {
  return std::visit(Overloaded{
                        [&](const Symmetric& s) {
                          if (static_cast<int>(a.entries.size()) != s.m) return false;
                          std::vector<bool> seen(s.m + 1, false);
                          for (int v : a.entries) {
                            if (v < 1 || v > s.m || seen[v]) return false;
                            seen[v] = true;
                          }
                          return true;
                        },
                        [&](const CyclicPower& c) {
                          if (static_cast<int>(a.entries.size()) != c.n) return false;
                          return std::all_of(a.entries.begin(), a.entries.end(),
                                             [&](int v) { return v >= 0 && v < c.m; });
                        },
                    },
                    g);
}

GroupElement identity(const GroupSpec& g) {
  validate(g);
  return std::visit(Overloaded{
                        [](const Symmetric& s) {
                          GroupElement e{std::vector<int>(s.m)};
                          std::iota(e.entries.begin(), e.entries.end(), 1);
                          return e;
                        },
                        [](const CyclicPower& c) { return GroupElement{std::vector<int>(c.n, 0)}; },
                    },
                    g);
}

GroupElement compose(const GroupSpec& g, const GroupElement& a, const GroupElement& b) {
  require(is_element(g, a) && is_element(g, b), "compose: operand is not an element of " + describe(g));
  GroupElement out{std::vector<int>(a.entries.size())};
  if (const auto* c = std::get_if<CyclicPower>(&g)) {
    for (std::size_t i = 0; i < a.entries.size(); ++i) out.entries[i] = (a.entries[i] + b.entries[i]) % c->m;
  } else {
    for (std::size_t i = 0; i < a.entries.size(); ++i) out.entries[i] = a.entries[b.entries[i] - 1];
  }
  return out;
}

GroupElement inverse(const GroupSpec& g, const GroupElement& a) {
  require(is_element(g, a), "inverse: operand is not an element of " + describe(g));
  GroupElement out{std::vector<int>(a.entries.size())};
  if (const auto* c = std::get_if<CyclicPower>(&g)) {
    for (std::size_t i = 0; i < a.entries.size(); ++i) out.entries[i] = (c->m - a.entries[i]) % c->m;
  } else {
    for (std::size_t i = 0; i < a.entries.size(); ++i) out.entries[a.entries[i] - 1] = static_cast<int>(i) + 1;
  }
  return out;
}

std::vector<GroupElement> elements(const GroupSpec& g) {
  const std::uint64_t n = order(g);
  if (n > kMaxGroupOrder)
    throw SizeLimitExceeded(describe(g) + " has " + std::to_string(n) + " elements; limit is " +
                            std::to_string(kMaxGroupOrder));
  std::vector<GroupElement> out;
  out.reserve(n);
  GroupElement e = identity(g);
  if (const auto* c = std::get_if<CyclicPower>(&g)) {
    for (std::uint64_t i = 0; i < n; ++i) {
      out.push_back(e);
      for (int pos = c->n - 1; pos >= 0; --pos) {
        if (++e.entries[pos] < c->m) break;
        e.entries[pos] = 0;
      }
    }
  } else {
    do {
      out.push_back(e);
    } while (std::next_permutation(e.entries.begin(), e.entries.end()));
  }
  return out;
}

std::size_t element_index(const GroupSpec& g, const GroupElement& a) {
  require(is_element(g, a), "element_index: not an element of " + describe(g));
  std::size_t idx = 0;
  if (const auto* c = std::get_if<CyclicPower>(&g)) {
    for (int v : a.entries) idx = idx * static_cast<std::size_t>(c->m) + static_cast<std::size_t>(v);
    return idx;
  }
  // Lehmer code.
  const std::size_t m = a.entries.size();
  for (std::size_t i = 0; i < m; ++i) {
    std::size_t smaller = 0;
    for (std::size_t j = i + 1; j < m; ++j) smaller += a.entries[j] < a.entries[i];
    idx = idx * (m - i) + smaller;
  }
  return idx;
}

std::string element_label(const GroupSpec& g, const GroupElement& a) {
  const char sep = std::holds_alternative<CyclicPower>(g) ? '|' : ',';
  std::string s;
  for (std::size_t i = 0; i < a.entries.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(a.entries[i]);
  }
  return s;
}

GroupElement parse_element(const GroupSpec& g, std::string_view text) {
  const char sep = std::holds_alternative<CyclicPower>(g) ? '|' : ',';
  GroupElement e{parse_int_list(text, sep)};
  require(is_element(g, e), "'" + std::string(text) + "' is not an element of " + describe(g));
  return e;
}

Partition cycle_type(const GroupElement& perm) {
  const std::size_t m = perm.entries.size();
  std::vector<bool> seen(m, false);
  std::vector<int> lengths;
  for (std::size_t i = 0; i < m; ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm.entries[j] - 1)) {
      seen[j] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.rbegin(), lengths.rend());
  return Partition(std::move(lengths));
}

int fixed_points(const GroupElement& perm) {
  int f = 0;
  for (std::size_t i = 0; i < perm.entries.size(); ++i) f += perm.entries[i] == static_cast<int>(i) + 1;
  return f;
}

int zero_count(const GroupElement& x) {
  return static_cast<int>(std::count(x.entries.begin(), x.entries.end(), 0));
}

std::vector<ConjugacyClass> conjugacy_classes(const GroupSpec& g) {
  validate(g);
  std::vector<ConjugacyClass> out;
  if (const auto* s = std::get_if<Symmetric>(&g)) {
    for (const Partition& rho : partitions_of(s->m)) {
      ConjugacyClass c;
      c.label = rho.to_string();
      c.cycle_type = rho;
      // Standard representative: consecutive cycles (1 2 .. r1)(r1+1 ..) ...
      c.representative.entries.resize(s->m);
      int start = 0;
      for (int len : rho.parts()) {
        for (int j = 0; j < len; ++j) c.representative.entries[start + j] = start + (j + 1) % len + 1;
        start += len;
      }
      c.size = partitions::class_size(rho);
      out.push_back(std::move(c));
    }
    return out;
  }
  for (GroupElement& e : elements(g)) {
    ConjugacyClass c;
    c.label = element_label(g, e);
    c.representative = std::move(e);
    c.size = 1;
    out.push_back(std::move(c));
  }
  return out;
}

std::size_t class_index(const GroupSpec& g, const GroupElement& a) {
  if (std::holds_alternative<CyclicPower>(g)) return element_index(g, a);
  require(is_element(g, a), "class_index: not an element of " + describe(g));
  const auto& parts = partitions_of(std::get<Symmetric>(g).m);
  const Partition rho = cycle_type(a);
  auto it = std::lower_bound(parts.begin(), parts.end(), rho, std::greater<>());
  ensure(it != parts.end() && *it == rho, "cycle type missing from partition list");
  return static_cast<std::size_t>(it - parts.begin());
}

std::size_t class_index_of_label(const GroupSpec& g, std::string_view label) {
  if (std::holds_alternative<CyclicPower>(g)) return element_index(g, parse_element(g, label));
  const int m = std::get<Symmetric>(g).m;
  const Partition rho = Partition::parse(label);
  require(rho.weight() == m, "cycle type '" + std::string(label) + "' is not a partition of " + std::to_string(m));
  const auto& parts = partitions_of(m);
  auto it = std::lower_bound(parts.begin(), parts.end(), rho, std::greater<>());
  return static_cast<std::size_t>(it - parts.begin());
}

std::vector<CharacterLabel> irreducible_labels(const GroupSpec& g) {
  std::vector<CharacterLabel> out;
  if (const auto* s = std::get_if<Symmetric>(&g)) {
    for (const Partition& mu : partitions_of(s->m)) out.emplace_back(mu);
  } else {
    for (GroupElement& y : elements(g)) out.emplace_back(std::move(y));
  }
  return out;
}

std::string character_label_string(const GroupSpec& g, const CharacterLabel& label) {
  if (const auto* p = std::get_if<Partition>(&label)) return p->to_string();
  return element_label(g, std::get<GroupElement>(label));
}

std::int64_t dot_mod(int m, const GroupElement& y, const GroupElement& x) {
  require(y.entries.size() == x.entries.size(), "character label and element differ in length");
  std::int64_t s = 0;
  for (std::size_t i = 0; i < x.entries.size(); ++i) s = (s + static_cast<std::int64_t>(y.entries[i]) * x.entries[i]) % m;
  return s;
}

CyclotomicValue cyclic_character(int m, const GroupElement& y, const GroupElement& x) {
  return CyclotomicValue::root_power(m, dot_mod(m, y, x));
}

CharacterValue character_value(const GroupSpec& g, const CharacterLabel& label, const ConjugacyClass& cls) {
  if (const auto* s = std::get_if<Symmetric>(&g)) {
    const auto* mu = std::get_if<Partition>(&label);
    require(mu && mu->weight() == s->m, "Sym character label must be a partition of m");
    return partitions::mn_character(*mu, cls.cycle_type);
  }
  const auto& c = std::get<CyclicPower>(g);
  const auto* y = std::get_if<GroupElement>(&label);
  require(y && is_element(g, *y), "CyclicPower character label must be a group element");
  return cyclic_character(c.m, *y, cls.representative);
}

}  // namespace bincayley::groups
