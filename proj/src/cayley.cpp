#include "bincayley/cayley.hpp"

#include <optional>
#include <sstream>
#include <unordered_map>

#include "bincayley/error.hpp"
#include "bincayley/numeric.hpp"
#include "bincayley/textio.hpp"

namespace bincayley::cayley {

using groups::CyclicPower;
using groups::Symmetric;

WeightFunction::WeightFunction(GroupSpec g, std::vector<std::uint64_t> class_values)
    : group_(std::move(g)), classes_(groups::conjugacy_classes(group_)), values_(std::move(class_values)) {
  require(values_.size() == classes_.size(), "weight function needs one value per conjugacy class of " +
                                                 groups::describe(group_));
  if (std::holds_alternative<CyclicPower>(group_)) {
    for (std::size_t i = 0; i < classes_.size(); ++i) {
      const auto inv = groups::inverse(group_, classes_[i].representative);
      const std::size_t j = groups::element_index(group_, inv);
      require(values_[i] == values_[j], "weight is not inversion invariant at " + classes_[i].label);
    }
  }
}

std::uint64_t WeightFunction::operator()(const GroupElement& x) const {
  return values_[groups::class_index(group_, x)];
}

WeightFunction natural_weight(const GroupSpec& g) {
  auto classes = groups::conjugacy_classes(g);
  std::vector<std::uint64_t> values;
  values.reserve(classes.size());
  for (const auto& c : classes) {
    const int v = std::holds_alternative<Symmetric>(g) ? groups::fixed_points(c.representative)
                                                      : groups::zero_count(c.representative);
    values.push_back(static_cast<std::uint64_t>(v));
  }
  return WeightFunction(g, std::move(values));
}

WeightFunction binomial_transform(const WeightFunction& w, int k) {
  require(k >= 0, "binomial transform needs k >= 0");
  std::vector<std::uint64_t> values;
  values.reserve(w.class_values().size());
  for (std::uint64_t v : w.class_values()) values.push_back(binomial(v, static_cast<std::uint64_t>(k)));
  return WeightFunction(w.group(), std::move(values));
}

std::uint64_t weighted_degree(const WeightFunction& w) {
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < w.classes().size(); ++i)
    total = checked_add(total, checked_mul(w.classes()[i].size, w.class_values()[i]));
  return total;
}

namespace {

void check_dense_order(const GroupSpec& g) {
  const std::uint64_t n = groups::order(g);
  if (n > kMaxDenseOrder)
    throw SizeLimitExceeded("dense adjacency of " + groups::describe(g) + " (" + std::to_string(n) +
                            " elements) exceeds limit " + std::to_string(kMaxDenseOrder));
}

std::int64_t as_entry(std::uint64_t v) {
  require(v <= static_cast<std::uint64_t>(INT64_MAX), "weight too large for a matrix entry");
  return static_cast<std::int64_t>(v);
}

IntMatrix cyclic_adjacency(const WeightFunction& w, const CyclicPower& c) {
  const auto elems = groups::elements(w.group());
  const std::size_t n = elems.size();
  std::vector<std::int64_t> value(n);
  for (std::size_t i = 0; i < n; ++i) value[i] = as_entry(w.class_values()[i]);
  IntMatrix a(n, n);
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t h = 0; h < n; ++h) {
      std::size_t idx = 0;
      for (int pos = 0; pos < c.n; ++pos) {
        const int d = (elems[h].entries[pos] - elems[g].entries[pos] + c.m) % c.m;
        idx = idx * static_cast<std::size_t>(c.m) + static_cast<std::size_t>(d);
      }
      a(g, h) = value[idx];
    }
  return a;
}

IntMatrix sym_adjacency(const WeightFunction& w, const Symmetric& s) {
  const auto elems = groups::elements(w.group());
  const std::size_t n = elems.size();
  const int m = s.m;
  // Cycle types are keyed by their multiplicity vector in base (m+1).
  auto key_of = [m](const std::vector<int>& counts) {
    std::size_t key = 0;
    for (int len = 1; len <= m; ++len) key = key * static_cast<std::size_t>(m + 1) + static_cast<std::size_t>(counts[len]);
    return key;
  };
  std::unordered_map<std::size_t, std::int64_t> value_by_key;
  for (std::size_t i = 0; i < w.classes().size(); ++i) {
    std::vector<int> counts(m + 1, 0);
    for (int len : w.classes()[i].cycle_type.parts()) ++counts[len];
    value_by_key[key_of(counts)] = as_entry(w.class_values()[i]);
  }
  std::vector<std::vector<int>> inv(n);
  for (std::size_t i = 0; i < n; ++i) inv[i] = groups::inverse(w.group(), elems[i]).entries;

  IntMatrix a(n, n);
  std::vector<int> prod(m), counts(m + 1);
  std::vector<char> seen(m);
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t h = 0; h < n; ++h) {
      // h * g^-1
      for (int i = 0; i < m; ++i) prod[i] = elems[h].entries[inv[g][i] - 1];
      std::fill(counts.begin(), counts.end(), 0);
      std::fill(seen.begin(), seen.end(), 0);
      for (int i = 0; i < m; ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (int j = i; !seen[j]; j = prod[j] - 1) {
          seen[j] = 1;
          ++len;
        }
        ++counts[len];
      }
      a(g, h) = value_by_key.at(key_of(counts));
    }
  return a;
}

}  // namespace

IntMatrix adjacency_matrix(const WeightFunction& w) {
  check_dense_order(w.group());
  if (const auto* c = std::get_if<CyclicPower>(&w.group())) return cyclic_adjacency(w, *c);
  return sym_adjacency(w, std::get<Symmetric>(w.group()));
}

WeightFunction parse_weight_file(std::string_view text) {
  std::optional<GroupSpec> group;
  std::vector<std::optional<std::uint64_t>> values;
  for (const auto& entry : textio::parse_assignments(text)) {
    if (entry.key == "group") {
      require(!group, "line " + std::to_string(entry.line) + ": duplicate group header");
      std::istringstream is{std::string(entry.value)};
      std::string kind;
      is >> kind;
      if (kind == "sym") {
        int m = 0;
        require(static_cast<bool>(is >> m), "line " + std::to_string(entry.line) + ": expected 'sym <m>'");
        group = Symmetric{m};
      } else if (kind == "cyclic") {
        int m = 0, n = 0;
        require(static_cast<bool>(is >> m >> n), "line " + std::to_string(entry.line) + ": expected 'cyclic <m> <n>'");
        group = CyclicPower{m, n};
      } else {
        throw_invalid("line " + std::to_string(entry.line) + ": unknown group kind '" + kind + "'");
      }
      std::string extra;
      require(!(is >> extra), "line " + std::to_string(entry.line) + ": trailing text in group header");
      groups::validate(*group);
      values.assign(groups::conjugacy_classes(*group).size(), std::nullopt);
      continue;
    }
    require(group.has_value(), "line " + std::to_string(entry.line) + ": weight entry before the group header");
    std::size_t idx = 0;
    try {
      idx = groups::class_index_of_label(*group, entry.key);
    } catch (const InvalidArgument& e) {
      throw InvalidArgument("line " + std::to_string(entry.line) + ": " + e.what());
    }
    require(!values[idx], "line " + std::to_string(entry.line) + ": class '" + entry.key + "' listed twice");
    values[idx] = textio::parse_natural(entry.value, entry.line);
  }
  require(group.has_value(), "weight file has no group header");
  const auto classes = groups::conjugacy_classes(*group);
  std::vector<std::uint64_t> out;
  out.reserve(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    require(values[i].has_value(), "weight file is missing class '" + classes[i].label + "'");
    out.push_back(*values[i]);
  }
  return WeightFunction(*group, std::move(out));
}

std::string format_weight_file(const WeightFunction& w) {
  std::ostringstream os;
  if (const auto* s = std::get_if<Symmetric>(&w.group())) {
    os << "group = sym " << s->m << '\n';
  } else {
    const auto& c = std::get<CyclicPower>(w.group());
    os << "group = cyclic " << c.m << ' ' << c.n << '\n';
  }
  for (std::size_t i = 0; i < w.classes().size(); ++i)
    os << w.classes()[i].label << " = " << w.class_values()[i] << '\n';
  return os.str();
}

}  // namespace bincayley::cayley
