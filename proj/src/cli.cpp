#include "bincayley/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <functional>
#include <limits>
#include <ostream>
#include <sstream>

#include "bincayley/acceptance.hpp"
#include "bincayley/cayley.hpp"
#include "bincayley/error.hpp"
#include "bincayley/exactla.hpp"
#include "bincayley/numeric.hpp"
#include "bincayley/rsk.hpp"
#include "bincayley/textio.hpp"

namespace bincayley::cli {

namespace {

using nlohmann::ordered_json;
using particlebox::Sigma;
using particlebox::SystemSpec;

// What a subcommand hands back for rendering.
struct Report {
  std::string status = "ok";
  int exit = kOk;
  ordered_json data = ordered_json::object();
  std::vector<std::string> provenance;
  std::function<std::string()> csv;  // set when the payload is tabular
};

constexpr int kUnset = std::numeric_limits<int>::min();

struct Options {
  int m = kUnset, n = kUnset, k = kUnset, t = kUnset;
  std::string sigma = "all";
  std::string dist, family, weights, perm;
  std::string format = "json";
  bool verify = false, slow = false, fast = false;
  std::uint64_t rounds = 100000, seed = 0;
};

ordered_json rationals(std::span<const Rat> v) {
  ordered_json a = ordered_json::array();
  for (const Rat& q : v) a.push_back(to_string(q));
  return a;
}

ordered_json spectrum_json(const spectra::SpectrumReport& r) {
  ordered_json entries = ordered_json::array();
  for (const auto& e : r.entries)
    entries.push_back({{"eigenvalue", to_string(e.eigenvalue)}, {"multiplicity", e.multiplicity}, {"contributors", e.contributors}});
  return {{"group", r.group}, {"group_order", r.group_order}, {"entries", entries}, {"kernel_dimension", r.kernel_dimension()}};
}

ordered_json measure_json(const SystemSpec& s, std::span<const Rat> p) {
  ordered_json o = ordered_json::object();
  const auto arr = particlebox::arrangements(s);
  for (std::size_t i = 0; i < arr.size(); ++i) o[particlebox::arrangement_key(s, arr[i])] = to_string(p[i]);
  return o;
}

ordered_json family_json(const particlebox::MarginalFamily& f) {
  ordered_json rows = ordered_json::array();
  const auto keys = particlebox::row_keys(f.spec, f.spec.k);
  for (std::size_t r = 0; r < keys.size(); ++r) {
    const std::string key = particlebox::row_key_string(keys[r]);
    const auto semi = key.find(';');
    rows.push_back({{"i", key.substr(2, semi - 2)}, {"j", key.substr(semi + 3)}, {"value", to_string(f.values[r])}});
  }
  return rows;
}

SystemSpec system_spec(const Options& o) {
  require(o.n >= 0 && o.m >= 0 && o.k >= 0, "--n, --m and --k are required and must be nonnegative");
  SystemSpec s{o.n, o.m, o.k, particlebox::parse_sigma(o.sigma)};
  s.validate();
  return s;
}

void guard_verification(const groups::GroupSpec& g, bool slow) {
  const std::uint64_t order = groups::order(g);
  if (const auto* s = std::get_if<groups::Symmetric>(&g)) {
    const int limit = slow ? 7 : 6;
    if (s->m > limit)
      throw SizeLimitExceeded("--verify supports Sym(m) with m <= " + std::to_string(limit) + (slow ? "" : " (7 with --slow)"));
    return;
  }
  const std::uint64_t limit = slow ? 4096 : 1024;
  if (order > limit)
    throw SizeLimitExceeded("--verify supports m^n <= " + std::to_string(limit) + (slow ? "" : " (4096 with --slow)"));
}

Report spectrum_report(const spectra::SpectrumReport& r, const cayley::WeightFunction& w, const Options& o,
                       std::string method) {
  Report out;
  out.data = spectrum_json(r);
  out.provenance.push_back(std::move(method));
  if (o.verify) {
    guard_verification(w.group(), o.slow);
    const auto v = spectra::verify_spectrum_exact(cayley::adjacency_matrix(w), r);
    ordered_json checks = ordered_json::array();
    for (const auto& c : v.checks)
      checks.push_back({{"eigenvalue", to_string(c.eigenvalue)}, {"claimed", c.claimed}, {"nullity", c.actual}});
    out.data["verification"] = {{"ok", v.ok}, {"checks", checks}};
    if (!v.ok) out.data["verification"]["message"] = v.message;
    out.provenance.push_back("exact nullity of A - lambda I");
    out.status = v.ok ? "verified" : "mismatch";
    out.exit = v.ok ? kOk : kNegative;
  }
  out.csv = [r] { return spectrum_csv(r); };
  return out;
}

Report cmd_spectrum_sym(const Options& o) {
  require(o.m >= 1 && o.k >= 0, "--m must be >= 1 and --k >= 0");
  const auto r = spectra::sym_spectrum(o.m, o.k);
  return spectrum_report(r, cayley::binomial_transform(cayley::natural_weight(groups::Symmetric{o.m}), o.k), o,
                         "fixed-point binomial closed form (crop / SYT count)");
}

Report cmd_spectrum_cyclic(const Options& o) {
  require(o.m >= 1 && o.n >= 1 && o.k >= 0, "--m and --n must be >= 1 and --k >= 0");
  const auto r = spectra::cyclic_spectrum(o.m, o.n, o.k);
  return spectrum_report(r, cayley::binomial_transform(cayley::natural_weight(groups::CyclicPower{o.m, o.n}), o.k), o,
                         "zero-count binomial closed form");
}

Report cmd_spectrum_custom(const Options& o) {
  const auto w = cayley::parse_weight_file(textio::read_file(o.weights));
  return spectrum_report(spectra::generic_spectrum(w), w, o, "irreducible character sums");
}

Report cmd_kernel(const Options& o) {
  const SystemSpec s = system_spec(o);
  const RatMatrix m = particlebox::restriction_matrix(s);
  const auto basis = exactla::kernel_basis(m);
  Report out;
  ordered_json b = ordered_json::array();
  for (const auto& v : basis) b.push_back(rationals(v));
  out.data = {{"rows", m.rows()}, {"columns", m.cols()}, {"rank", m.cols() - basis.size()}, {"dimension", basis.size()},
              {"basis", b}};
  out.provenance = {"restriction matrix", "exact kernel basis"};
  return out;
}

Report cmd_degeneracy(const Options& o) {
  const SystemSpec s = system_spec(o);
  const auto p = particlebox::parse_distribution_file(s, textio::read_file(o.dist));
  Report out;
  out.data["dimension"] = particlebox::degeneracy(s, p);
  out.data["kernel_dimension"] = exactla::kernel_basis(particlebox::restriction_matrix(s)).size();
  if (auto ends = particlebox::segment_endpoints(s, p))
    out.data["endpoints"] = {measure_json(s, ends->first), measure_json(s, ends->second)};
  out.provenance = {"exact kernel basis", "fiber dimension by exact simplex"};
  return out;
}

Report cmd_observe(const Options& o) {
  const SystemSpec s = system_spec(o);
  const auto f = particlebox::parse_family_file(s, textio::read_file(o.family));
  const auto r = particlebox::observability_check(f);
  Report out;
  out.data["verdict"] = particlebox::verdict_name(r.verdict);
  if (!r.detail.empty()) out.data["detail"] = r.detail;
  if (!r.signed_solution.empty()) out.data["signed_solution"] = measure_json(s, r.signed_solution);
  if (r.observable()) out.data["witness"] = measure_json(s, r.witness);
  if (!r.farkas.empty())
    out.data["certificate"] = {{"arrangement_multipliers", measure_json(s, r.farkas)},
                               {"family_multipliers", rationals(r.family_multipliers)}};
  out.provenance = {"compatibility check", "exact linear solve", "exact simplex feasibility"};
  out.status = r.observable() ? "observable" : "not-observable";
  out.exit = r.observable() ? kOk : kNegative;
  return out;
}

Report family_report(const particlebox::MarginalFamily& f) {
  Report out;
  out.data["family"] = family_json(f);
  out.csv = [f] { return family_csv(f); };
  return out;
}

Report cmd_restrict(const Options& o) {
  const SystemSpec s = system_spec(o);
  const auto p = particlebox::parse_distribution_file(s, textio::read_file(o.dist));
  particlebox::validate_signed_measure(s, p);
  Report out = family_report(particlebox::restrict(s, p));
  out.provenance = {"restriction matrix product"};
  return out;
}

Report cmd_simulate(const Options& o) {
  const SystemSpec s = system_spec(o);
  const auto p = particlebox::parse_distribution_file(s, textio::read_file(o.dist));
  Report out = family_report(particlebox::simulate_game(s, p, o.rounds, o.seed));
  out.data["sampler"] = particlebox::kSamplerName;
  out.provenance = {particlebox::kSamplerName};
  return out;
}

Report cmd_rsk(const Options& o) {
  const auto perm = parse_int_list(o.perm);
  const auto pair = rsk::rsk(perm);
  Report out;
  out.data = {{"insertion", pair.insertion.rows},
              {"recording", pair.recording.rows},
              {"shape", pair.insertion.shape().parts()},
              {"lis", rsk::lis(perm)}};
  out.provenance = {"row insertion", "patience sorting"};
  return out;
}

Report cmd_lis_count(const Options& o) {
  require(o.m >= 0, "--m is required");
  if (o.m > rsk::kMaxEnumeration)
    throw SizeLimitExceeded("lis-count enumerates S_m for m <= " + std::to_string(rsk::kMaxEnumeration));
  Report out;
  if (o.t != kUnset) {
    require(o.t >= 0, "--t must be nonnegative");
    out.data = {{"m", o.m}, {"t", o.t}, {"count", rsk::count_by_lis(o.m, o.t)}};
  } else {
    out.data = {{"m", o.m}, {"distribution", rsk::lis_distribution(o.m)}};
  }
  out.provenance = {"enumeration with patience sorting"};
  return out;
}

Report cmd_verify_all(const Options& o) {
  require(!(o.fast && o.slow), "--fast and --slow are exclusive");
  const auto results = acceptance::run_acceptance({o.slow});
  Report out;
  ordered_json rows = ordered_json::array();
  bool ok = true;
  for (const auto& r : results) {
    ok = ok && r.passed;
    rows.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}, {"seconds", r.seconds}});
  }
  out.data = {{"suite", o.slow ? "slow" : "fast"}, {"criteria", rows}};
  out.provenance = {"acceptance suite"};
  out.status = ok ? "verified" : "mismatch";
  out.exit = ok ? kOk : kNegative;
  return out;
}

ordered_json params_json(const std::string& command, const Options& o) {
  ordered_json p = ordered_json::object();
  auto add = [&](const char* name, int v) {
    if (v != kUnset) p[name] = v;
  };
  add("m", o.m);
  add("n", o.n);
  add("k", o.k);
  add("t", o.t);
  const bool system = command == "kernel" || command == "degeneracy" || command == "observe" ||
                      command == "restrict" || command == "simulate";
  if (system) p["sigma"] = o.sigma;
  if (!o.dist.empty()) p["dist"] = o.dist;
  if (!o.family.empty()) p["family"] = o.family;
  if (!o.weights.empty()) p["weights"] = o.weights;
  if (!o.perm.empty()) p["perm"] = o.perm;
  if (command == "simulate") {
    p["rounds"] = o.rounds;
    p["seed"] = o.seed;
  }
  if (command.rfind("spectrum", 0) == 0) p["verify"] = o.verify;
  if (o.slow) p["slow"] = true;
  return p;
}

std::vector<std::string> split_csv_line(std::string_view line) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        fields.back() += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        fields.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.emplace_back();
    } else {
      fields.back() += c;
    }
  }
  require(!quoted, "unterminated quote in CSV line '" + std::string(line) + "'");
  return fields;
}

std::vector<std::vector<std::string>> csv_rows(std::string_view text, std::string_view header) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (first) {
      require(line == header, "expected CSV header '" + std::string(header) + "'");
      first = false;
      continue;
    }
    rows.push_back(split_csv_line(line));
  }
  require(!first, "CSV text is empty");
  return rows;
}

std::string quote(std::string_view s) { return "\"" + std::string(s) + "\""; }

}  // namespace

std::string spectrum_csv(const spectra::SpectrumReport& r) {
  std::ostringstream os;
  os << "eigenvalue,multiplicity,contributors\n";
  for (const auto& e : r.entries) {
    std::string labels;
    for (std::size_t i = 0; i < e.contributors.size(); ++i) labels += (i ? ";" : "") + e.contributors[i];
    os << to_string(e.eigenvalue) << ',' << e.multiplicity << ',' << quote(labels) << '\n';
  }
  return os.str();
}

spectra::SpectrumReport parse_spectrum_csv(std::string_view text) {
  spectra::SpectrumReport r;
  for (const auto& f : csv_rows(text, "eigenvalue,multiplicity,contributors")) {
    require(f.size() == 3, "spectrum CSV rows need three fields");
    spectra::SpectrumEntry e{parse_rational(f[0]), textio::parse_natural(f[1], 0), {}};
    std::string_view rest = f[2];
    while (!rest.empty()) {
      const auto semi = rest.find(';');
      e.contributors.emplace_back(rest.substr(0, semi));
      rest = semi == std::string_view::npos ? std::string_view{} : rest.substr(semi + 1);
    }
    r.group_order += e.multiplicity;
    r.entries.push_back(std::move(e));
  }
  return r;
}

std::string family_csv(const particlebox::MarginalFamily& f) {
  std::ostringstream os;
  os << "i,j,value\n";
  for (const auto& row : family_json(f))
    os << quote(row["i"].get<std::string>()) << ',' << quote(row["j"].get<std::string>()) << ','
       << row["value"].get<std::string>() << '\n';
  return os.str();
}

particlebox::MarginalFamily parse_family_csv(const SystemSpec& s, std::string_view text) {
  std::string assignments;
  for (const auto& f : csv_rows(text, "i,j,value")) {
    require(f.size() == 3, "family CSV rows need three fields");
    assignments += "i=" + f[0] + ";j=" + f[1] + " = " + f[2] + "\n";
  }
  return particlebox::parse_family_file(s, assignments);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact spectra of binomial Cayley graphs and particle-box marginal problems", "bincayley"};
  app.require_subcommand(1);
  Options o;
  std::string command;
  std::function<Report()> action;

  auto system_flags = [&](CLI::App* sub) {
    sub->add_option("--sigma", o.sigma, "Arrangement class")->check(CLI::IsMember({"all", "bij"}));
    sub->add_option("--n", o.n, "Particles")->required();
    sub->add_option("--m", o.m, "Boxes")->required();
    sub->add_option("--k", o.k, "Observed subset size")->required();
  };
  auto format_flag = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  };
  auto bind = [&](CLI::App* sub, std::string name, Report (*fn)(const Options&)) {
    sub->callback([&, name, fn] {
      command = name;
      action = [&, fn] { return fn(o); };
    });
  };

  auto* spectrum = app.add_subcommand("spectrum", "Spectrum of a binomial Cayley graph");
  spectrum->require_subcommand(1);
  auto* sym = spectrum->add_subcommand("sym", "Sym(m) with the binomial fixed-point weight");
  sym->add_option("--m", o.m, "Degree")->required();
  sym->add_option("--k", o.k, "Binomial order")->required();
  auto* cyc = spectrum->add_subcommand("cyclic", "(Z_m)^n with the binomial zero-count weight");
  cyc->add_option("--m", o.m, "Modulus")->required();
  cyc->add_option("--n", o.n, "Coordinates")->required();
  cyc->add_option("--k", o.k, "Binomial order")->required();
  auto* custom = spectrum->add_subcommand("custom", "Any weight function read from a file");
  custom->add_option("--weights", o.weights, "Weight file")->required();
  for (auto* sub : {sym, cyc, custom}) {
    sub->add_flag("--verify", o.verify, "Check multiplicities against exact nullities");
    sub->add_flag("--slow", o.slow, "Raise the verification size limits");
    format_flag(sub);
  }
  bind(sym, "spectrum sym", cmd_spectrum_sym);
  bind(cyc, "spectrum cyclic", cmd_spectrum_cyclic);
  bind(custom, "spectrum custom", cmd_spectrum_custom);

  auto* kernel = app.add_subcommand("kernel", "Kernel of the restriction matrix");
  system_flags(kernel);
  bind(kernel, "kernel", cmd_kernel);

  auto* degeneracy = app.add_subcommand("degeneracy", "Dimension of the fiber of a distribution");
  system_flags(degeneracy);
  degeneracy->add_option("--dist", o.dist, "Distribution file")->required();
  bind(degeneracy, "degeneracy", cmd_degeneracy);

  auto* observe = app.add_subcommand("observe", "Decide whether a marginal family comes from a distribution");
  system_flags(observe);
  observe->add_option("--family", o.family, "Marginal family file")->required();
  bind(observe, "observe", cmd_observe);

  auto* restrict_cmd = app.add_subcommand("restrict", "k-marginals of a distribution");
  system_flags(restrict_cmd);
  restrict_cmd->add_option("--dist", o.dist, "Distribution file")->required();
  format_flag(restrict_cmd);
  bind(restrict_cmd, "restrict", cmd_restrict);

  auto* rsk_cmd = app.add_subcommand("rsk", "Robinson-Schensted-Knuth tableaux of a permutation");
  rsk_cmd->add_option("--perm", o.perm, "One-line permutation, e.g. 3,1,2")->required();
  bind(rsk_cmd, "rsk", cmd_rsk);

  auto* lis_cmd = app.add_subcommand("lis-count", "Permutations of S_m by longest increasing subsequence");
  lis_cmd->add_option("--m", o.m, "Degree")->required();
  lis_cmd->add_option("--t", o.t, "Only count lis == t");
  bind(lis_cmd, "lis-count", cmd_lis_count);

  auto* simulate = app.add_subcommand("simulate", "Tally k-marginals of arrangements sampled from a distribution");
  system_flags(simulate);
  simulate->add_option("--dist", o.dist, "Distribution file")->required();
  simulate->add_option("--rounds", o.rounds, "Rounds")->capture_default_str();
  simulate->add_option("--seed", o.seed, "Generator seed")->capture_default_str();
  format_flag(simulate);
  bind(simulate, "simulate", cmd_simulate);

  auto* verify_all = app.add_subcommand("verify-all", "Run the acceptance suite");
  verify_all->add_flag("--fast", o.fast, "Fast suite (default)");
  verify_all->add_flag("--slow", o.slow, "Include the large exact suites");
  bind(verify_all, "verify-all", cmd_verify_all);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  }

  ordered_json doc{{"command", command}, {"params", params_json(command, o)}};
  auto fail = [&](int code, const char* status, const std::string& message) {
    err << "error: " << message << '\n';
    doc["status"] = status;
    doc["data"] = {{"message", message}};
    doc["provenance"] = ordered_json::array();
    out << doc.dump(2) << '\n';
    return code;
  };
  try {
    Report r = action();
    if (o.format == "csv") {
      if (!r.csv) return fail(kUsage, "usage-error", "--format csv is only available for spectra and marginal families");
      out << r.csv();
      return r.exit;
    }
    doc["status"] = r.status;
    doc["data"] = std::move(r.data);
    doc["provenance"] = r.provenance;
    out << doc.dump(2) << '\n';
    return r.exit;
  } catch (const InvalidArgument& e) {
    return fail(kUsage, "usage-error", e.what());
  } catch (const EmptyPolytope& e) {
    return fail(kUsage, "usage-error", e.what());
  } catch (const InternalError& e) {
    return fail(kInternal, "internal-error", e.what());
  } catch (const std::exception& e) {
    return fail(kInternal, "internal-error", e.what());
  }
}

}  // namespace bincayley::cli
