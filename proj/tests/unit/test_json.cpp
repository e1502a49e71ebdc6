#include <gtest/gtest.h>

#include "rectree/json.hpp"

using rectree::Json;
using rectree::Rational;

TEST(Json, RationalsAreStrings) {
  EXPECT_EQ(Json(Rational(Rational::parse("-10/4"))).dump(), "\"-5/2\"");
  EXPECT_EQ(Json(Rational(7)).dump(), "\"7\"");
  EXPECT_EQ(Json::parse("\"3/9\"").get<Rational>(), Rational::parse("1/3"));
  EXPECT_EQ(Json::parse("12").get<Rational>(), Rational(12));
}

TEST(Json, TreeSchema) {
  const auto t = rectree::build_tree(rectree::make_first_order(1, 5, 8, 1),
                                     std::vector<Rational>{Rational(1)}, 3);
  const Json j = t;
  EXPECT_EQ(j["recurrence"]["family"], "first-order");
  EXPECT_EQ(j["recurrence"]["parameters"]["A2"], 5);
  EXPECT_EQ(j["recurrence"]["order"], 1);
  EXPECT_EQ(j["recurrence"]["degree"], 2);
  const auto& root = j["root"];
  EXPECT_EQ(root["value"], "1");
  EXPECT_EQ(root["depth"], 1);
  EXPECT_EQ(root["status"], "expanded");
  const auto& child = root["children"][0];
  EXPECT_EQ(child["value"], "-3");
  EXPECT_EQ(child["multiplicity"], 2);
  EXPECT_EQ(child["children"][0]["value"], "5/9");
  EXPECT_EQ(child["children"][0]["status"], "depth_limit");
  EXPECT_TRUE(child["children"][0]["children"].empty());
}

TEST(Json, CutoffKindIsRecorded) {
  const auto t = rectree::build_tree(rectree::make_first_order(0, 0, 1, 0),
                                     std::vector<Rational>{Rational(1)}, 3);
  const Json j = t;
  EXPECT_EQ(j["root"]["status"], "nonrational_cutoff");
  EXPECT_EQ(j["root"]["cutoff"], "complex");
}

TEST(Json, ByteStable) {
  auto render = [] {
    const auto t = rectree::build_tree(rectree::make_order3_unfolding({1, 1}),
                                       std::vector<Rational>(3, Rational(1)), 7);
    return Json(t).dump(2);
  };
  EXPECT_EQ(render(), render());
}

TEST(Json, SomosRunAndReports) {
  const Json run = rectree::somos4({1, 1}, 6);
  EXPECT_EQ(run["s"].dump(), R"(["1","1","1","1","2","3"])");
  EXPECT_EQ(run["a"][2], "2");

  const Json cf = rectree::verify_closed_form_branch({1, 1}, 8);
  EXPECT_EQ(cf["matched"], true);
  EXPECT_EQ(cf["found_path"][7], "64");
  EXPECT_TRUE(cf["alternatives"][0].is_null());

  const Json conj = rectree::check_conjecture({1, 1}, 6, 20);
  EXPECT_EQ(conj["all_factorable"], true);
  EXPECT_EQ(conj["witnesses"]["16"]["numerator"].dump(), "[5,5,5,5]");
}
