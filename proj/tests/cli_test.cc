#include "cli.h"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

namespace assoclab::cli {
namespace {

const std::string kFixtures = ASSOCLAB_FIXTURE_DIR;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome RunArgs(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = Run(args, out, err);
  return {code, out.str(), err.str()};
}

bool Has(const std::string& text, const std::string& needle) { return text.find(needle) != std::string::npos; }

TEST(Cli, Tetrahedron) {
  const auto r = RunArgs({"tetrahedron"});
  EXPECT_EQ(r.code, kExitPass) << r.out << r.err;
  EXPECT_TRUE(Has(r.out, "F(E((D(CB))A)): 6.28318530718"));
  EXPECT_TRUE(Has(r.out, "((F((ED)C))B)A: -6.28318530718"));
  EXPECT_TRUE(Has(r.out, "Δ = 4π: PASS"));
}

TEST(Cli, TetrahedronJson) {
  const auto r = RunArgs({"--json", "tetrahedron"});
  ASSERT_EQ(r.code, kExitPass);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["command"], "tetrahedron");
  EXPECT_TRUE(doc["passed"].get<bool>());
  double plus = 0, minus = 0, delta = 0;
  for (const auto& res : doc["results"]) {
    if (res["name"] == "F(E((D(CB))A))") plus = res["value"];
    if (res["name"] == "((F((ED)C))B)A") minus = res["value"];
    if (res["name"] == "difference") delta = res["value"];
  }
  EXPECT_NEAR(plus, 2 * M_PI, 1e-9);
  EXPECT_NEAR(minus, -2 * M_PI, 1e-9);
  EXPECT_NEAR(delta, 4 * M_PI, 1e-9);
  EXPECT_FALSE(doc.contains("wall_time_s"));
}

TEST(Cli, TorusCheck) {
  const auto r = RunArgs({"torus-check"});
  EXPECT_EQ(r.code, kExitPass);
  EXPECT_TRUE(Has(r.out, "no non-zero fixed points: PASS"));
  EXPECT_TRUE(Has(r.out, "overall factor: 2"));
}

TEST(Cli, AcOnCyclicGroup) {
  const auto r = RunArgs({"ac", "--file", kFixtures + "/z5.json", "--max-len", "4"});
  EXPECT_EQ(r.code, kExitPass);
  EXPECT_TRUE(Has(r.out, "classes: 5\n"));
}

TEST(Cli, ValidateAndAssocCheck) {
  EXPECT_EQ(RunArgs({"validate", "--file", kFixtures + "/z5.json"}).code, kExitPass);
  const auto r = RunArgs({"assoc-check", "--file", kFixtures + "/crafted_nonassoc.json", "--n", "3"});
  EXPECT_EQ(r.code, kExitFail);
  EXPECT_TRUE(Has(r.out, "witness: [\"a\",\"b\",\"c\"]"));
  EXPECT_EQ(RunArgs({"assoc-check", "--file", kFixtures + "/z5.json", "--n", "4"}).code, kExitPass);
}

TEST(Cli, ValidateReportsViolations) {
  const auto path = std::filesystem::temp_directory_path() / "assoclab_cli_bad.json";
  std::ifstream in(kFixtures + "/z5.json");
  std::stringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  // Drop the inverse of 1 from its slot by pointing it at 1 itself.
  const std::string entry = "\"1\",\n      \"4\"";
  const auto pos = text.find(entry);
  ASSERT_NE(pos, std::string::npos);
  text.replace(pos, entry.size(), "\"1\",\n      \"1\"");
  std::ofstream(path) << text;
  const auto r = RunArgs({"validate", "--file", path.string()});
  EXPECT_EQ(r.code, kExitFail);
  EXPECT_TRUE(Has(r.out, "violation: inverse law"));
  std::filesystem::remove(path);
}

TEST(Cli, HLambdaRational) {
  const auto r = RunArgs({"--json", "h-lambda", "--lambda", "1/2", "--max-len", "12"});
  ASSERT_EQ(r.code, kExitPass) << r.out;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["parameters"]["lambda_kind"], "rational");
}

TEST(Cli, LadderAndLace) {
  EXPECT_EQ(RunArgs({"ladder", "--n", "2"}).code, kExitPass);
  const auto lace = RunArgs({"lace", "--k", "3", "--verify"});
  EXPECT_EQ(lace.code, kExitPass);
  EXPECT_TRUE(Has(lace.out, "laces: 9"));
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(RunArgs({}).code, kExitUsage);
  EXPECT_EQ(RunArgs({"no-such-command"}).code, kExitUsage);
  EXPECT_EQ(RunArgs({"ladder"}).code, kExitUsage);
  EXPECT_EQ(RunArgs({"ladder", "--n", "x"}).code, kExitUsage);
  EXPECT_EQ(RunArgs({"assoc-check", "--file", kFixtures + "/z5.json", "--n", "2"}).code, kExitUsage);
  EXPECT_EQ(RunArgs({"h-lambda", "--lambda", "abc"}).code, kExitUsage);
  EXPECT_EQ(RunArgs({"h-lambda", "--lambda", "1/0"}).code, kExitUsage);
  EXPECT_EQ(RunArgs({"validate", "--file", kFixtures + "/missing.json"}).code, kExitUsage);
  EXPECT_EQ(RunArgs({"--tol", "-1", "tetrahedron"}).code, kExitUsage);
  EXPECT_EQ(RunArgs({"--help"}).code, kExitPass);
}

TEST(Cli, ToleranceOverride) {
  const auto r = RunArgs({"--json", "--tol", "1e-3", "ladder", "--n", "1"});
  ASSERT_EQ(r.code, kExitPass);
  EXPECT_EQ(nlohmann::json::parse(r.out)["parameters"]["tol"], 1e-3);
}

TEST(Cli, DeterministicGivenSeed) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"--seed", "7", "tetrahedron"}, {"--seed", "7", "lace", "--k", "2"}, {"torus-check"}}) {
    EXPECT_EQ(RunArgs(args).out, RunArgs(args).out);
  }
}

TEST(Cli, TimingFlag) {
  const auto doc = nlohmann::json::parse(RunArgs({"--json", "--timing", "torus-check"}).out);
  EXPECT_TRUE(doc.contains("wall_time_s"));
}

TEST(Cli, ParseFraction) {
  EXPECT_EQ(ParseFraction("1/2"), std::make_pair(1LL, 2LL));
  EXPECT_EQ(ParseFraction("-6/4"), std::make_pair(-3LL, 2LL));
  EXPECT_FALSE(ParseFraction("0.5").has_value());
  EXPECT_THROW(ParseFraction("1/0"), std::invalid_argument);
}

}  // namespace
}  // namespace assoclab::cli
