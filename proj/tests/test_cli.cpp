#include <gtest/gtest.h>

#include <json.hpp>

#include <sstream>

#include "bincayley/cli.hpp"
#include "bincayley/rational.hpp"

namespace bincayley::cli {
namespace {

using nlohmann::json;

struct Outcome {
  int code;
  std::string out;
  std::string err;
  json doc() const { return json::parse(out); }
};

Outcome run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(BINCAYLEY_TEST_DATA) + "/" + name; }

TEST(Cli, CyclicSpectrumVerified) {
  const auto r = run_cli({"spectrum", "cyclic", "--m", "2", "--n", "3", "--k", "2", "--verify"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const auto d = r.doc();
  EXPECT_EQ(d["command"], "spectrum cyclic");
  EXPECT_EQ(d["status"], "verified");
  std::map<std::string, int> got;
  for (const auto& e : d["data"]["entries"]) got[e["eigenvalue"]] = e["multiplicity"];
  EXPECT_EQ(got, (std::map<std::string, int>{{"0", 1}, {"2", 3}, {"4", 3}, {"6", 1}}));
  EXPECT_TRUE(d["provenance"].is_array());
}

TEST(Cli, KernelOfTheTwelveByEightMatrix) {
  const auto r = run_cli({"kernel", "--sigma", "all", "--n", "3", "--m", "2", "--k", "2"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const auto d = r.doc()["data"];
  EXPECT_EQ(d["dimension"], 1);
  EXPECT_EQ(d["basis"][0], json({"1", "-1", "-1", "1", "-1", "1", "1", "-1"}));
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run_cli({"spectrum", "sym", "--m", "99", "--k", "-1"}).code, kUsage);
  EXPECT_EQ(run_cli({"spectrum", "sym", "--m", "3"}).code, kUsage);
  EXPECT_EQ(run_cli({"spectrum", "sym", "--m", "3", "--k", "1", "--bogus"}).code, kUsage);
  EXPECT_EQ(run_cli({"frobnicate"}).code, kUsage);
  EXPECT_EQ(run_cli({}).code, kUsage);
  EXPECT_EQ(run_cli({"kernel", "--sigma", "bij", "--n", "3", "--m", "2", "--k", "1"}).code, kUsage);
  EXPECT_EQ(run_cli({"kernel", "--sigma", "some", "--n", "3", "--m", "2", "--k", "1"}).code, kUsage);
  EXPECT_EQ(run_cli({"rsk", "--perm", "1,1"}).code, kUsage);
  EXPECT_EQ(run_cli({"lis-count", "--m", "9"}).code, kUsage);
  EXPECT_EQ(run_cli({"degeneracy", "--n", "2", "--m", "2", "--k", "1", "--dist", "/nonexistent"}).code, kUsage);
  EXPECT_EQ(run_cli({"kernel", "--n", "3", "--m", "2", "--k", "2", "--format", "csv"}).code, kUsage);
}

TEST(Cli, VerificationSizeGuards) {
  EXPECT_EQ(run_cli({"spectrum", "sym", "--m", "7", "--k", "2", "--verify"}).code, kUsage);
  EXPECT_EQ(run_cli({"spectrum", "cyclic", "--m", "2", "--n", "11", "--k", "2", "--verify"}).code, kUsage);
  const auto r = run_cli({"spectrum", "sym", "--m", "7", "--k", "2"});
  EXPECT_EQ(r.code, kOk);
}

TEST(Cli, HelpExitsZero) {
  const auto r = run_cli({"--help"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("verify-all"), std::string::npos);
}

TEST(Cli, DegeneracyOfTheUniformTwoByTwo) {
  const auto r = run_cli({"degeneracy", "--sigma", "all", "--n", "2", "--m", "2", "--k", "1", "--dist", data("uniform_2x2.txt")});
  ASSERT_EQ(r.code, kOk) << r.err;
  const auto d = r.doc()["data"];
  EXPECT_EQ(d["dimension"], 1);
  EXPECT_EQ(d["endpoints"][1]["0,0"], "1/2");
  const auto p = run_cli({"degeneracy", "--n", "2", "--m", "2", "--k", "1", "--dist", data("point_2x2.txt")});
  EXPECT_EQ(p.doc()["data"]["dimension"], 0);
}

TEST(Cli, ObserveVerdictsAndExitCodes) {
  const auto no = run_cli({"observe", "--n", "3", "--m", "2", "--k", "2", "--family", data("pairs_not_observable.txt")});
  EXPECT_EQ(no.code, kNegative);
  EXPECT_EQ(no.doc()["status"], "not-observable");
  EXPECT_EQ(no.doc()["data"]["verdict"], "no-nonnegative-solution");
  EXPECT_TRUE(no.doc()["data"].contains("certificate"));
  const auto yes = run_cli({"observe", "--sigma", "bij", "--n", "3", "--m", "3", "--k", "1", "--family", data("identity_bij3.txt")});
  EXPECT_EQ(yes.code, kOk);
  EXPECT_EQ(yes.doc()["data"]["witness"]["1,2,3"], "1");
}

TEST(Cli, SpectrumCsvRoundTrips) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"spectrum", "sym", "--m", "5", "--k", "2"},
           {"spectrum", "cyclic", "--m", "3", "--n", "2", "--k", "1"},
           {"spectrum", "custom", "--weights", data("z4_weights.txt"), "--verify"}}) {
    auto csv_args = args;
    csv_args.insert(csv_args.end(), {"--format", "csv"});
    const auto csv = run_cli(csv_args);
    ASSERT_EQ(csv.code, kOk) << csv.err;
    const auto parsed = parse_spectrum_csv(csv.out);
    EXPECT_EQ(spectrum_csv(parsed), csv.out);
    const auto j = run_cli(args).doc()["data"];
    ASSERT_EQ(j["entries"].size(), parsed.entries.size());
    for (std::size_t i = 0; i < parsed.entries.size(); ++i) {
      EXPECT_EQ(parse_rational(j["entries"][i]["eigenvalue"].get<std::string>()), parsed.entries[i].eigenvalue);
      EXPECT_EQ(j["entries"][i]["multiplicity"], parsed.entries[i].multiplicity);
      EXPECT_EQ(j["entries"][i]["contributors"], json(parsed.entries[i].contributors));
    }
  }
}

TEST(Cli, FamilyCsvAndJsonRoundTrip) {
  const particlebox::SystemSpec s{2, 2, 1, particlebox::Sigma::All};
  const auto csv = run_cli({"restrict", "--n", "2", "--m", "2", "--k", "1", "--dist", data("uniform_2x2.txt"), "--format", "csv"});
  ASSERT_EQ(csv.code, kOk) << csv.err;
  const auto f = parse_family_csv(s, csv.out);
  EXPECT_EQ(family_csv(f), csv.out);
  for (const Rat& v : f.values) EXPECT_EQ(v, Rat(1, 2));
  const auto j = run_cli({"restrict", "--n", "2", "--m", "2", "--k", "1", "--dist", data("uniform_2x2.txt")});
  const auto rows = j.doc()["data"]["family"];
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows[1]["i"], "(1)");
  EXPECT_EQ(rows[1]["j"], "(1)");
  EXPECT_EQ(rows[1]["value"], "1/2");
}

TEST(Cli, SimulationIsDeterministic) {
  const std::vector<std::string> args{"simulate", "--n", "2", "--m", "2", "--k", "1", "--dist", data("uniform_2x2.txt"),
                                      "--rounds", "2000", "--seed", "17"};
  const auto a = run_cli(args), b = run_cli(args);
  ASSERT_EQ(a.code, kOk) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.doc()["data"]["sampler"], particlebox::kSamplerName);
}

TEST(Cli, RskAndLisCount) {
  const auto r = run_cli({"rsk", "--perm", "3,1,2"});
  ASSERT_EQ(r.code, kOk);
  EXPECT_EQ(r.doc()["data"]["insertion"], json({{1, 2}, {3}}));
  EXPECT_EQ(r.doc()["data"]["lis"], 2);
  EXPECT_EQ(run_cli({"lis-count", "--m", "5", "--t", "2"}).doc()["data"]["count"], 41);
  EXPECT_EQ(run_cli({"lis-count", "--m", "4"}).doc()["data"]["distribution"], json({0, 1, 13, 9, 1}));
}

}  // namespace
}  // namespace bincayley::cli
