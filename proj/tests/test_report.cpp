#include "tjm/report.hpp"
#include "tjm/suite.hpp"

#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

using tjm::CycNum;
using tjm::Report;
using tjm::Status;

namespace {

Report sample_report() {
  Report r;
  r.verb = "verify";
  tjm::PointReport point;
  point.params = {{"p", "3"}, {"n", "2"}};
  point.conventions = {{"q", "3"}};
  point.checks.push_back(tjm::value_check("gauss", "lemma", CycNum(-3L), CycNum(-3L), "q theta(-1)"));
  point.checks.push_back(tjm::value_check("d2", "t_power", CycNum(1L), CycNum::root_of_unity(4, 1) * CycNum(tjm::Rational(2, 3))));
  point.checks.push_back(tjm::property_check("model", "projector", true));
  point.checks.push_back(tjm::info_check("mackey", "interpretation", "reported only"));
  r.points.push_back(point);
  r.aggregate.push_back(tjm::info_check("remark", "witnesses", "equal=1 differ=0"));
  return r;
}

}  // namespace

TEST(Report, StatusFollowsValues) {
  const Report r = sample_report();
  EXPECT_EQ(r.points[0].checks[0].status, Status::kPass);
  EXPECT_EQ(r.points[0].checks[1].status, Status::kFail);
  EXPECT_EQ(r.points[0].checks[3].status, Status::kInfo);
  EXPECT_FALSE(r.passed());
  EXPECT_NE(r.points[0].find("d2", "t_power"), nullptr);
  EXPECT_EQ(r.points[0].find("d2", "missing"), nullptr);
}

TEST(Report, ValuesShareOneOrder) {
  const auto c = tjm::value_check("x", "y", CycNum::root_of_unity(3, 1), CycNum::root_of_unity(4, 1));
  ASSERT_TRUE(c.lhs && c.rhs);
  EXPECT_EQ(c.lhs->order(), 12u);
  EXPECT_EQ(c.rhs->order(), 12u);
}

TEST(Report, CoefficientStrings) {
  const CycNum v = CycNum(tjm::Rational(-1, 2)) + CycNum::root_of_unity(4, 1) * CycNum(3L);
  EXPECT_EQ(tjm::coefficient_strings(v), (std::vector<std::string>{"-1/2", "3/1"}));
  EXPECT_EQ(tjm::cycnum_from_strings(4, {"-1/2", "3/1"}), v);
}

TEST(Report, JsonRoundTripIsExact) {
  const Report r = sample_report();
  const std::string text = tjm::render_json(r);
  const Report back = tjm::parse_json(text);
  EXPECT_EQ(tjm::render_json(back), text);
  ASSERT_EQ(back.points.size(), 1u);
  EXPECT_EQ(*back.points[0].checks[1].rhs, *r.points[0].checks[1].rhs);
  const auto j = nlohmann::json::parse(text);
  EXPECT_EQ(j["status"], "fail");
  EXPECT_EQ(j["points"][0]["checks"][1]["rhs"]["order"], 4);
}

TEST(Report, MarkdownListsEveryCheck) {
  const Report r = sample_report();
  const std::string md = tjm::render_markdown(r);
  for (const auto& c : r.points[0].checks) EXPECT_NE(md.find(c.group + "." + c.name), std::string::npos) << c.name;
  EXPECT_NE(md.find("remark.witnesses"), std::string::npos);
  EXPECT_EQ(md, tjm::render_markdown(r));
}

TEST(Report, VerifiedPointRendersStably) {
  tjm::PointParams p;
  const Report r{"verify", {tjm::verify_point(p, {"gauss", "hasse_davenport", "tau"})}, {}};
  EXPECT_TRUE(r.passed());
  const std::string a = tjm::render_json(r);
  const Report again{"verify", {tjm::verify_point(p, {"gauss", "hasse_davenport", "tau"})}, {}};
  EXPECT_EQ(a, tjm::render_json(again));
  EXPECT_EQ(tjm::render_json(tjm::parse_json(a)), a);
}
