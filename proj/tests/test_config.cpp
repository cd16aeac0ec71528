#include "tjm/config.hpp"

#include <gtest/gtest.h>

using tjm::ConfigError;
using tjm::parse_config;

TEST(Config, ParsesPointAndComments) {
  const auto c = parse_config(
      "# comment\n"
      "p = 5   # trailing\n"
      "n = 4\n"
      "d = 2\n"
      "theta_exponent = 7\n"
      "theta_pi = 4,1\n"
      "checks = model,d2\n"
      "output = markdown\n");
  EXPECT_EQ(c.base.p, 5u);
  EXPECT_EQ(c.base.n, 4u);
  EXPECT_EQ(c.base.theta_exponent, 7);
  EXPECT_EQ(c.base.theta_pi.order, 4u);
  EXPECT_EQ(c.base.theta_pi.exponent, 1);
  EXPECT_EQ(c.checks, (std::vector<std::string>{"model", "d2"}));
  EXPECT_EQ(c.output, tjm::OutputFormat::kMarkdown);
  EXPECT_FALSE(c.base.theta_exponent_2.has_value());
}

TEST(Config, RejectsMalformedDocuments) {
  EXPECT_THROW(parse_config("p = 3\np = 5\n"), ConfigError);
  EXPECT_THROW(parse_config("prime = 3\n"), ConfigError);
  EXPECT_THROW(parse_config("p 3\n"), ConfigError);
  EXPECT_THROW(parse_config("p = three\n"), ConfigError);
  EXPECT_THROW(parse_config("checks = model,bogus\n"), ConfigError);
  EXPECT_THROW(parse_config("output = yaml\n"), ConfigError);
  EXPECT_THROW(parse_config("poly_n = 2\n"), ConfigError);
}

TEST(Config, PolynomialIsLowToHigh) {
  const auto c = parse_config("poly_n = 2,2,1\n");
  ASSERT_TRUE(c.base.poly_n.has_value());
  EXPECT_EQ(*c.base.poly_n, (tjm::FpPoly{2, 2, 1}));
}

TEST(Config, RegularGridEnumeratesRegularExponents) {
  const auto c = parse_config("grid.theta_exponent = regular\ngrid.theta_pi = 1,0;4,1\n");
  const auto points = tjm::expand_grid(c);
  ASSERT_EQ(points.size(), 12u);
  EXPECT_EQ(points[0].theta_exponent, 1);
  EXPECT_EQ(points[1].theta_exponent, 1);
  EXPECT_EQ(points[1].theta_pi.order, 4u);
  std::vector<std::int64_t> exponents;
  for (std::size_t i = 0; i < points.size(); i += 2) exponents.push_back(points[i].theta_exponent);
  EXPECT_EQ(exponents, (std::vector<std::int64_t>{1, 2, 3, 5, 6, 7}));
}

TEST(Config, GridOrderIsLexicographic) {
  const auto c = parse_config("grid.p = 5,3\ngrid.theta_exponent = 1,3\n");
  const auto points = tjm::expand_grid(c);
  ASSERT_EQ(points.size(), 4u);
  EXPECT_EQ(points[0].p, 5u);
  EXPECT_EQ(points[1].p, 5u);
  EXPECT_EQ(points[1].theta_exponent, 3);
  EXPECT_EQ(points[2].p, 3u);
}

TEST(Config, EmptyGridAndInvalidPoints) {
  EXPECT_TRUE(tjm::expand_grid(parse_config("grid.p =\n")).empty());
  EXPECT_THROW(tjm::expand_grid(parse_config("theta_exponent = 4\n")), ConfigError);
  EXPECT_THROW(tjm::expand_grid(parse_config("grid.p = 3,4\n")), ConfigError);
  EXPECT_THROW(tjm::expand_grid(parse_config("n = 3\n")), ConfigError);
}

TEST(Config, SettingsOverrideIndividually) {
  auto c = parse_config("p = 3\n");
  tjm::apply_setting(c, "p", "7");
  EXPECT_EQ(c.base.p, 7u);
  tjm::apply_setting(c, "checks", "all");
  EXPECT_TRUE(c.checks.empty());
}
