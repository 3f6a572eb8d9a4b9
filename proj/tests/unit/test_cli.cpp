#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "liken/cli.hpp"
#include "liken/families.hpp"
#include "liken/prefix_io.hpp"

using namespace liken;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "liken");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("liken_cli_test_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  return dir / name;
}

std::size_t line_count(const std::string& s) { return std::count(s.begin(), s.end(), '\n'); }

}  // namespace

TEST(Cli, EnumerateCsvRowCount) {
  const auto r = run({"enumerate", "--family", "nstar", "--count", "100", "--format", "csv"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(line_count(r.out), 102u);
}

TEST(Cli, EnumerateNumericalShowsBothReps) {
  const auto r = run({"enumerate", "--family", "numerical", "--gens", "3,4,5", "--count", "8", "--format", "csv"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("8/1,8.000000000000,1^1*3^1;2^2,"), std::string::npos);
}

TEST(Cli, EnumerateJsonRoundTrip) {
  const auto path = scratch("k2.json");
  const auto r = run({"enumerate", "--family", "modclass", "--p", "2", "--count", "4", "--out", path.string()});
  ASSERT_EQ(r.code, 0);
  std::ifstream in(path);
  const Prefix p = prefix_from_json(json::parse(in));
  ASSERT_EQ(p.size(), 5u);
  for (std::size_t n = 0; n < 5; ++n) EXPECT_EQ(p[n].value, Value::log_int(2 * n + 1));
  EXPECT_TRUE(same_prefix(p, enumerate(family_modclass(2), Limit::count(5))));
}

TEST(Cli, CheckExitCodes) {
  EXPECT_EQ(run({"check", "--family", "nstar", "--count", "2000", "--props", "convexity,or"}).code, 0);

  const auto k2 = run({"check", "--family", "modclass", "--p", "2", "--count", "100", "--props", "or", "--format", "json"});
  EXPECT_EQ(k2.code, 1);
  const auto doc = json::parse(k2.out);
  EXPECT_EQ(doc["reports"][0]["witnesses"][0]["indices"][0], 2);

  const auto num = run({"check", "--family", "numerical", "--gens", "3,4,5", "--props", "uniqueness", "--format", "json"});
  EXPECT_EQ(num.code, 1);
  EXPECT_EQ(json::parse(num.out)["reports"][0]["witnesses"][0]["values"][0], "8/1");
}

TEST(Cli, CheckAllWritesReports) {
  const auto dir = scratch("reports");
  const auto r = run({"check", "--family", "nstar", "--count", "300", "--out-dir", dir.string()});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
  EXPECT_TRUE(std::filesystem::exists(dir / "legendre.dat"));
  EXPECT_TRUE(std::filesystem::exists(dir / "gap-lemmas.json"));
  std::ifstream in(dir / "or.json");
  EXPECT_EQ(json::parse(in)["verdict"], "pass");
}

TEST(Cli, Compare) {
  const auto same = run({"compare", "--a", "nstar", "--b", "nstar"});
  EXPECT_EQ(same.code, 0);
  EXPECT_EQ(json::parse(same.out)["homothety"]["lambda"], "1");

  const auto k2 = run({"compare", "--a", "nstar", "--b", "modclass:2"});
  EXPECT_EQ(k2.code, 1);
  const auto doc = json::parse(k2.out);
  EXPECT_EQ(doc["homothety"]["outcome"], "NotIsomorphic");
  EXPECT_EQ(doc["order"]["n"], 3);

  const auto scaled = run({"compare", "--a", "numerical:3,4,5", "--b", "numerical:6,8,10"});
  EXPECT_EQ(scaled.code, 0);
  EXPECT_EQ(json::parse(scaled.out)["homothety"]["lambda"], "1/2");
}

TEST(Cli, Semigroup) {
  const auto r = run({"semigroup", "--gens", "6,9,20"});
  EXPECT_EQ(r.code, 0);
  const auto doc = json::parse(r.out);
  EXPECT_EQ(doc["frobenius"], 43);
  EXPECT_EQ(doc["genus"], 22);
  EXPECT_EQ(doc["apery"]["6"].size(), 6u);
  EXPECT_EQ(run({"semigroup", "--gens", "3,5", "--apery", "7"}).code, 2);
}

TEST(Cli, ConstructAndVerify) {
  const auto trace = scratch("trace.jsonl");
  const auto prefix = scratch("constructed.json");
  const auto r = run({"construct", "--steps", "120", "--out", trace.string(), "--prefix-out", prefix.string(), "--verify"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::ifstream in(trace);
  std::string line;
  std::size_t lines = 0;
  while (std::getline(in, line)) {
    EXPECT_EQ(json::parse(line)["n"], lines);
    ++lines;
  }
  EXPECT_EQ(lines, 120u);
  EXPECT_EQ(json::parse(r.out)["trace_problems"].size(), 0u);

  const auto v = run({"verify-main", "--prefix", prefix.string()});
  EXPECT_EQ(v.code, 0);
  EXPECT_EQ(json::parse(v.out)["verdict"], "TheoremConsistent");
  EXPECT_EQ(run({"verify-main", "--family", "modclass", "--p", "2", "--count", "50"}).code, 1);
}

TEST(Cli, ErrorsAreMachineReadable) {
  const auto bad = run({"enumerate", "--family", "custom-rational", "--values", "3/2,1"});
  EXPECT_EQ(bad.code, 2);
  const auto e = json::parse(bad.err);
  EXPECT_EQ(e["error"], "NotIncreasing");
  EXPECT_EQ(e["index"], 2);

  EXPECT_EQ(json::parse(run({"construct", "--policy", "midpoint", "--steps", "10"}).err)["error"], "ValueCollision");
  EXPECT_EQ(run({"check", "--family", "nstar", "--props", "nonsense"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, PrecisionCeilingFromEnvironment) {
  ::setenv("LIKEN_PRECISION_CEILING", "12", 1);
  EXPECT_EQ(run({"compare", "--a", "nstar", "--b", "custom-rational:1,3/2"}).code, 2);
  ::setenv("LIKEN_PRECISION_CEILING", "256", 1);
  const auto r = run({"compare", "--a", "nstar", "--b", "custom-rational:1,3/2"});
  ::unsetenv("LIKEN_PRECISION_CEILING");
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(json::parse(r.out)["homothety"]["outcome"], "NotIsomorphic");
}
