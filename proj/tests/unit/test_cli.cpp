#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "cli.hpp"
#include "rectree/json.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = rectree::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(CliSomos, Text) {
  auto r = run({"somos", "--c1", "1", "--c2", "1", "-n", "11"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "1 1 1 1 2 3 7 23 59 314 1529\n");
  r = run({"somos", "--c1", "2", "--c2", "3", "-n", "5"});
  EXPECT_EQ(r.out, "1 1 1 1 5\n");
  r = run({"somos", "--c1", "1", "--c2", "1", "-n", "4"});
  EXPECT_EQ(r.out, "1 1 1 1\n");
}

TEST(CliSomos, FormatsAndErrors) {
  auto r = run({"somos", "-n", "5", "--format", "bfile"});
  EXPECT_EQ(r.out, "1 1\n2 1\n3 1\n4 1\n5 2\n");
  r = run({"somos", "-n", "5", "--format", "csv"});
  EXPECT_EQ(r.out.substr(0, 8), "n,s,t,a\n");
  r = run({"somos", "-n", "5", "--format", "dot"});
  EXPECT_EQ(r.code, 2);
  r = run({"somos", "--c1", "0", "--c2", "0", "-n", "12"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("ZeroDivision at index 9"), std::string::npos);
}

TEST(CliTree, JsonWorkedExample) {
  const auto r = run({"tree", "--family", "first-order", "--A1", "1", "--A2", "5", "--B1", "8",
                      "--B2", "1", "--init", "1", "--depth", "4", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = rectree::Json::parse(r.out);
  EXPECT_EQ(j["root"]["value"], "1");
  const auto& a2 = j["root"]["children"][0];
  EXPECT_EQ(a2["value"], "-3");
  EXPECT_EQ(a2["multiplicity"], 2);
  EXPECT_EQ(a2["children"][0]["value"], "5/9");
  EXPECT_EQ(a2["children"][1]["value"], "1");
  EXPECT_EQ(j["levels"].size(), 4u);
}

TEST(CliTree, SomosRatioLevels) {
  const auto r = run({"tree", "--family", "somos-ratio", "--c1", "1", "--c2", "1", "--init", "1",
                      "--depth", "3", "--format", "csv"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            "depth,total_nodes,distinct_values,new_value_count,new_values,all_rational_so_far\n"
            "1,1,1,1,1,true\n"
            "2,2,2,1,2,true\n"
            "3,4,3,1,3/4,true\n");
}

TEST(CliTree, Order3FlagsNonIntegers) {
  auto r = run({"tree", "--family", "somos-order3", "--c1", "1", "--c2", "1", "--depth", "5"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("level 5 (4 nodes, 2 new): 1 2 3 4"), std::string::npos);
  EXPECT_EQ(r.out.find("non-integer"), std::string::npos);
  r = run({"tree", "--family", "somos-order3", "--depth", "7"});
  EXPECT_NE(r.out.find("49/4*"), std::string::npos);
  EXPECT_NE(r.out.find("non-integer rationals present"), std::string::npos);
}

TEST(CliTree, DotGuardAndBadFamily) {
  auto r = run({"tree", "--family", "somos-ratio", "--depth", "3", "--format", "dot"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("digraph", 0), 0u);
  r = run({"tree", "--family", "somos-order3", "--depth", "13"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("--unsafe"), std::string::npos);
  r = run({"tree", "--family", "first-order", "--depth", "25"});
  EXPECT_EQ(r.code, 2);
  r = run({"tree", "--family", "nope"});
  EXPECT_EQ(r.code, 2);
  r = run({"tree", "--family", "somos-order3", "--init", "1,1", "--depth", "5"});
  EXPECT_EQ(r.code, 1);
  r = run({"tree", "--format", "bfile"});
  EXPECT_EQ(r.code, 2);
}

TEST(CliVerify, PassAndFail) {
  auto r = run({"verify", "--c1", "1", "--c2", "1", "-n", "30"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
  EXPECT_EQ(r.out.find("ERROR"), std::string::npos);
  r = run({"verify", "--c1", "2", "--c2", "3", "-n", "30"});
  EXPECT_EQ(r.code, 0) << r.out;
  r = run({"verify", "--c1", "0", "--c2", "0", "-n", "30", "--format", "json"});
  EXPECT_EQ(r.code, 1);
  const auto j = rectree::Json::parse(r.out);
  EXPECT_EQ(j["all_pass"], false);
  EXPECT_EQ(j["checks"][1]["status"], "ERROR");
  EXPECT_NE(j["checks"][1]["detail"].get<std::string>().find("ZeroDivision"), std::string::npos);
}

TEST(CliSearch, WorkedExampleAndResume) {
  const std::vector<std::string> args{"search", "--A1-min", "0", "--A1-max", "2", "--A2-min", "4",
                                      "--A2-max", "6", "--B1-min", "7", "--B1-max", "9",
                                      "--depth", "6", "--format", "json"};
  auto r = run(args);
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = rectree::Json::parse(r.out);
  bool found = false;
  for (const auto& h : j["hits"]) found = found || h["coefficients"].dump() == "[1,5,8,1]";
  EXPECT_TRUE(found);

  const auto path = std::filesystem::temp_directory_path() / "rectree_cli_resume.json";
  std::filesystem::remove(path);
  auto with_resume = args;
  with_resume.insert(with_resume.end(), {"--resume", path.string(), "--checkpoint-every", "5"});
  const auto first = run(with_resume);
  EXPECT_EQ(first.out, r.out);
  EXPECT_TRUE(std::filesystem::exists(path));
  // Finished checkpoint: resuming scans nothing new and reports the same.
  const auto again = run(with_resume);
  EXPECT_EQ(again.out, r.out);
  std::filesystem::remove(path);
}

TEST(CliSearch, TextAndCsv) {
  auto r = run({"search", "--A1-min", "0", "--A1-max", "0", "--A2-min", "0", "--A2-max", "0",
                "--B1-min", "1", "--B1-max", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("hits 0"), std::string::npos);
  r = run({"search", "--A1-min", "1", "--A1-max", "1", "--A2-min", "5", "--A2-max", "5",
           "--B1-min", "8", "--B1-max", "8", "--format", "csv"});
  EXPECT_EQ(r.out, "A1,A2,B1,B2,verified_depth,level2_roots\n1,5,8,1,8,-3\n");
}

TEST(CliConjecture, TextAndJson) {
  auto r = run({"conjecture", "--c1", "1", "--c2", "1", "--depth", "6", "--horizon", "20"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("all factorable: yes"), std::string::npos);
  EXPECT_NE(r.out.find("4 = s(5)*s(5)"), std::string::npos);
  r = run({"conjecture", "--format", "json"});
  const auto j = rectree::Json::parse(r.out);
  EXPECT_EQ(j["values_checked"], 8);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"bogus"}).code, 2);
  EXPECT_EQ(run({"somos", "--c1", "x"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}
