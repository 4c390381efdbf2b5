#include "oracles.hpp"
#include "sharp/cli.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

using nlohmann::json;
using oracle::pi;

namespace {

struct CliRun {
  int code = 0;
  std::string out, err;
};

CliRun run(std::initializer_list<const char*> args) {
  std::vector<const char*> argv{"sharpc"};
  argv.insert(argv.end(), args.begin(), args.end());
  std::ostringstream out, err;
  const int code = sharp::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

double num(const json& j) { return std::stod(j.get<std::string>()); }

}  // namespace

TEST(Cli, ConstantJson) {
  const CliRun r = run({"constant", "--n", "1", "--p", "inf"});
  ASSERT_EQ(r.code, sharp::kExitOk) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["command"], "constant");
  EXPECT_NEAR(num(j["result"]["c_value"]), 4 / pi, 1e-15);
  EXPECT_EQ(j["result"]["formula"], "Q1_ODD");
  EXPECT_EQ(j["result"]["params"]["n"], 1);
}

TEST(Cli, ConstantCsv) {
  const CliRun r = run({"constant", "--n", "2", "--q", "2", "--format", "csv"});
  ASSERT_EQ(r.code, sharp::kExitOk) << r.err;
  std::istringstream in(r.out);
  std::string header, row;
  std::getline(in, header);
  std::getline(in, row);
  EXPECT_EQ(header.rfind("n,p,q,c_value,", 0), 0u);
  EXPECT_EQ(row.rfind("2,2,2,", 0), 0u);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({"constant", "--n", "1", "--p", "2", "--q", "2"}).code, sharp::kExitUsage);
  EXPECT_EQ(run({"constant", "--n", "0", "--p", "2"}).code, sharp::kExitUsage);
  EXPECT_EQ(run({"constant", "--n", "1", "--p", "0.5"}).code, sharp::kExitUsage);
  EXPECT_EQ(run({"nosuchcommand"}).code, sharp::kExitUsage);
  EXPECT_EQ(run({"hfactor", "--n", "1", "--p", "2", "--r", "1.0"}).code, sharp::kExitUsage);
  EXPECT_EQ(run({"appendixb", "--s", "4"}).code, sharp::kExitUsage);
  EXPECT_FALSE(run({"constant", "--n", "1", "--p", "abc"}).err.empty());
}

TEST(Cli, HFactorDominated) {
  const CliRun r = run({"hfactor", "--n", "2", "--p", "3", "--r", "0.5"});
  ASSERT_EQ(r.code, sharp::kExitOk) << r.err;
  const json j = json::parse(r.out);
  EXPECT_TRUE(j["dominated"].get<bool>());
  EXPECT_LE(num(j["weighted"]), num(j["c_value"]));
}

TEST(Cli, ProfileAndScan) {
  const CliRun p = run({"profile", "--n", "4", "--q", "1", "--grid", "17"});
  ASSERT_EQ(p.code, sharp::kExitOk) << p.err;
  const json jp = json::parse(p.out);
  EXPECT_NEAR(num(jp["result"]["beta_star"]), pi / 2, 1e-10);
  EXPECT_EQ(jp["result"]["grid"].size(), 17u);

  const CliRun s = run({"scan", "--n", "2,4", "--q", "1", "--resolution", "32"});
  ASSERT_EQ(s.code, sharp::kExitOk) << s.err;
  const json js = json::parse(s.out);
  ASSERT_EQ(js["reports"].size(), 2u);
  EXPECT_EQ(js["reports"][0]["classification"], "DECREASING");
  EXPECT_EQ(js["reports"][1]["classification"], "INCREASING");
}

TEST(Cli, AppendixBAnchors) {
  const CliRun r = run({"appendixb", "--s", "99", "--levels", "3"});
  ASSERT_EQ(r.code, sharp::kExitOk) << r.err;
  const json j = json::parse(r.out);
  const auto& lv = j["cascade"]["levels"];
  ASSERT_EQ(lv.size(), 3u);
  EXPECT_NEAR(num(lv[0]["residual"]) / 2.5799047817666032e-70, 1.0, 1e-14);
  EXPECT_NEAR(num(lv[2]["residual"]) / 7.92129489904e-120, 1.0, 1e-11);
  EXPECT_EQ(j["fourier_convention"], "g(x)=f(x+pi/2)");
}

TEST(Cli, DigitsFromEnvironment) {
  ::setenv(sharp::kDigitsEnv, "200", 1);
  const CliRun a = run({"appendixb", "--s", "21", "--levels", "1"});
  const CliRun b = run({"appendixb", "--s", "21", "--levels", "1", "--digits", "80"});
  ::setenv(sharp::kDigitsEnv, "40", 1);
  const CliRun c = run({"appendixb", "--s", "99", "--levels", "3"});
  ::unsetenv(sharp::kDigitsEnv);
  ASSERT_EQ(a.code, sharp::kExitOk) << a.err;
  EXPECT_EQ(json::parse(a.out)["digits"], 200);
  EXPECT_EQ(json::parse(b.out)["digits"], 80);
  // Too few digits for the cascade is an error, not a silently wrong answer.
  EXPECT_NE(c.code, sharp::kExitOk);
  EXPECT_FALSE(c.err.empty());
}

TEST(Cli, VerifyIsReproducible) {
  const CliRun a = run({"verify", "--trials", "60", "--seed", "17"});
  const CliRun b = run({"verify", "--trials", "60", "--seed", "17"});
  ASSERT_EQ(a.code, sharp::kExitOk) << a.err;
  EXPECT_EQ(a.out, b.out);
  const json j = json::parse(a.out);
  EXPECT_EQ(j["report"]["trials"].size(), 60u);
}

TEST(Cli, VerifyViolationExitCode) {
  const CliRun r = run({"verify", "--n", "1", "--p", "2", "--max-degree", "1", "--trials", "200", "--norm", "probability",
                     "--format", "csv"});
  EXPECT_EQ(r.code, sharp::kExitViolation);
  EXPECT_NE(r.out.find(",true"), std::string::npos);
}

TEST(Cli, WritesToFile) {
  const auto path = std::filesystem::temp_directory_path() / "sharpc_cli_test.json";
  const std::string p = path.string();
  const CliRun r = run({"constant", "--n", "3", "--p", "inf", "--out", p.c_str()});
  ASSERT_EQ(r.code, sharp::kExitOk) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  const json j = json::parse(in);
  EXPECT_NEAR(num(j["result"]["c_value"]), 48 / pi, 1e-12);
  std::filesystem::remove(path);
}
