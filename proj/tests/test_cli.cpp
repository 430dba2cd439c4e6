#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "dwmds");
  std::ostringstream out;
  std::ostringstream err;
  const int status = dwmds::cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

}  // namespace

TEST(CliCompute, TwistedWeightClassCoefficient) {
  const auto r = run({"compute", "--rank", "4", "--n", "2", "--twist", "0,1,2,0", "--coeff", "10,10,17,10"});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "-p^36*(p^3 - 2*p^2 + 2*p - 1)*g1^3\n");
}

TEST(CliCompute, RankTwoTable) {
  const auto r = run({"compute", "--rank", "2", "--n", "1", "--twist", "0,0"});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out,
            "lambda  a_lambda\n"
            "(0,0)   1\n"
            "(0,1)   -1\n"
            "(1,0)   -1\n"
            "(1,1)   1\n");
}

TEST(CliCompute, RankFourJsonHas601Records) {
  const auto r = run({"compute", "--rank", "4", "--twist", "0,0,0,0", "--format", "json"});
  ASSERT_EQ(r.status, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["coefficients"].size(), 601u);
  EXPECT_EQ(j["rank"], 4);
}

TEST(CliCompute, EvalPIsLabelled) {
  const auto r = run({"compute", "--rank", "4", "--n", "2", "--twist", "0,1,2,0", "--coeff", "10,10,17,10", "--eval-p",
                      "1", "--eval-g", "3"});
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("non-canonical"), std::string::npos);
  EXPECT_NE(r.out.find(": 0\n"), std::string::npos);
}

TEST(CliCompute, OutputFile) {
  const auto path = std::filesystem::temp_directory_path() / "dwmds_cli_test.json";
  const auto r = run({"compute", "--rank", "2", "--twist", "1,0", "--format", "json", "--output", path.string()});
  EXPECT_EQ(r.status, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  const auto j = nlohmann::json::parse(in);
  EXPECT_EQ(j["twist"], (std::vector<int>{1, 0}));
  std::filesystem::remove(path);
}

TEST(CliCompute, UsageErrors) {
  EXPECT_EQ(run({"compute", "--rank", "4", "--twist", "0,0"}).status, 2);
  EXPECT_EQ(run({"compute", "--rank", "1", "--twist", "0"}).status, 2);
  EXPECT_EQ(run({"compute", "--rank", "2", "--twist", "0,x"}).status, 2);
  EXPECT_EQ(run({"compute", "--rank", "2", "--twist", "0,0", "--n", "0"}).status, 2);
  EXPECT_EQ(run({"compute", "--rank", "2", "--twist", "0,0", "--format", "xml"}).status, 2);
  EXPECT_EQ(run({"compute", "--rank", "2", "--twist", "0,0", "--weight", "1"}).status, 2);
  EXPECT_EQ(run({"compute", "--rank", "2"}).status, 2);
  EXPECT_EQ(run({"frobnicate"}).status, 2);
  EXPECT_EQ(run({}).status, 2);
  const auto r = run({"compute", "--rank", "4", "--twist", "0,0"});
  EXPECT_NE(r.err.find("--twist"), std::string::npos);
}

TEST(CliPatterns, CountOnly) {
  EXPECT_EQ(run({"patterns", "--rank", "4", "--twist", "0,0,0,0", "--count-only"}).out,
            "total 4096\nnonstrict 2216\nstrict 1880\n");
  EXPECT_EQ(run({"patterns", "--rank", "4", "--twist", "0,1,2,0", "--weight", "10,10,17,10", "--count-only"}).out,
            "total 27\nnonstrict 6\nstrict 21\n");
  EXPECT_EQ(run({"patterns", "--rank", "2", "--twist", "1,1", "--count-only"}).out, "total 9\nnonstrict 0\nstrict 9\n");
}

TEST(CliPatterns, JsonLinesInCanonicalOrder) {
  const auto r = run({"patterns", "--rank", "3", "--twist", "0,0,0", "--format", "json"});
  ASSERT_EQ(r.status, 0);
  std::istringstream lines(r.out);
  std::string line;
  std::size_t count = 0;
  while (std::getline(lines, line)) {
    const auto j = nlohmann::json::parse(line);
    EXPECT_TRUE(j.contains("strict"));
    EXPECT_TRUE(j.contains("critical"));
    EXPECT_EQ(j["weight"].size(), 3u);
    ++count;
  }
  EXPECT_EQ(count, 64u);
  const auto again = run({"patterns", "--rank", "3", "--twist", "0,0,0", "--format", "json"});
  EXPECT_EQ(again.out, r.out);
}

TEST(CliExplain, ZeroPattern) {
  const auto r = run({"explain", "--twist", "0,0,0,0", "--pattern", "0,0,0,0,0,0;0,0,0,0;0,0"});
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("total contribution: p^0 * product = 1"), std::string::npos);
  std::istringstream lines(r.out);
  std::string line;
  std::size_t rules = 0;
  while (std::getline(lines, line)) {
    if (line.find("->") == std::string::npos) continue;
    ++rules;
    EXPECT_NE(line.find("zero-component -> 1"), std::string::npos) << line;
  }
  EXPECT_EQ(rules, 4u);  // equal zeros join: one component per upper row, two in the last
}

TEST(CliExplain, RankTwoAtBounds) {
  const auto r = run({"explain", "--twist", "1,2", "--n", "3", "--pattern", "3,2"});
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("[(3)/(2)]"), std::string::npos);
  EXPECT_NE(r.out.find("circled rightmost -> g/p: p^-1*g2"), std::string::npos);
  EXPECT_NE(r.out.find("circled rightmost -> g/p: -p^-1"), std::string::npos);
}

TEST(CliExplain, InvalidPatternNamesBound) {
  const auto r = run({"explain", "--twist", "1,2", "--pattern", "4,0"});
  EXPECT_EQ(r.status, 2);
  EXPECT_NE(r.err.find("(1,1)"), std::string::npos);
  EXPECT_NE(r.err.find("bound 3"), std::string::npos);
  EXPECT_EQ(run({"explain", "--twist", "1,2", "--pattern", "4;0"}).status, 2);
  EXPECT_EQ(run({"explain", "--twist", "1,2,0", "--pattern", "1,0"}).status, 2);
  EXPECT_EQ(run({"explain", "--rank", "3", "--twist", "1,2", "--pattern", "1,0"}).status, 2);
}

TEST(CliExplain, Json) {
  const auto r = run({"explain", "--twist", "0,1,2,0", "--n", "2", "--pattern", "10,6,5,4,3,0;4,4,4,4;1,2", "--format",
                      "json"});
  ASSERT_EQ(r.status, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j["strict"].get<bool>());
  EXPECT_EQ(j["weight"], (std::vector<int>{10, 10, 17, 10}));
  EXPECT_EQ(j["components"].size(), 9u);
}

TEST(CliVerify, SuitesPass) {
  EXPECT_EQ(run({"verify", "--suite", "example2"}).status, 0);
  EXPECT_EQ(run({"verify", "--suite", "tokuyama", "--rank", "4"}).status, 0);
  EXPECT_EQ(run({"verify", "--suite", "dimension", "--max-rank", "3", "--max-twist", "1"}).status, 0);
  EXPECT_EQ(run({"verify", "--suite", "rank2", "--max-twist", "1", "--max-n", "2"}).status, 0);
}

TEST(CliVerify, JsonSummary) {
  const auto r = run({"verify", "--suite", "example2", "--format", "json"});
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["summary"]["failed"], 0);
  EXPECT_EQ(j["summary"]["total"], 4);
}

TEST(CliVerify, FailedCaseMapsToExitOne) {
  dwmds::VerificationReport report{"demo", {}};
  report.add("ok", "1", "1");
  EXPECT_EQ(dwmds::cli::verification_status(report), 0);
  report.add("bad", "1", "2");
  EXPECT_EQ(dwmds::cli::verification_status(report), 1);
}

TEST(CliVerify, UnknownSuiteIsUsageError) { EXPECT_EQ(run({"verify", "--suite", "nope"}).status, 2); }

TEST(CliHelp, ExitsZero) {
  const auto r = run({"--help"});
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("compute"), std::string::npos);
}
