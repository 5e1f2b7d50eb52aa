#include <gtest/gtest.h>

#include "chow/param_poly.hpp"

using chow::ParamPoly;
using chow::Rational;

namespace {

const ParamPoly q = ParamPoly::symbol("q");
const ParamPoly x = ParamPoly::symbol("x");
const ParamPoly mu = ParamPoly::symbol("mu");

TEST(ParamPoly, ZeroAndConstants) {
  EXPECT_TRUE(ParamPoly().is_zero());
  EXPECT_TRUE(ParamPoly(0).is_zero());
  EXPECT_TRUE(ParamPoly(7).is_constant());
  EXPECT_EQ(*ParamPoly(7).constant_value(), Rational(7));
  EXPECT_FALSE(q.constant_value().has_value());
  EXPECT_EQ((q - q), ParamPoly(0));
}

TEST(ParamPoly, ToStringIsCanonical) {
  EXPECT_EQ((15 * x + 17 * mu).to_string(), "17*mu + 15*x");
  EXPECT_EQ((17 * mu + 15 * x).to_string(), "17*mu + 15*x");
  EXPECT_EQ((1 - q).to_string(), "-q + 1");
  EXPECT_EQ(ParamPoly(Rational(1, 2)).to_string(), "1/2");
  EXPECT_EQ((q * q - 1).to_string(), "q^2 - 1");
}

TEST(ParamPoly, ArithmeticIdentities) {
  EXPECT_EQ((q + 1) * (q - 1), q * q - 1);
  EXPECT_EQ((q + x).pow(2), q * q + 2 * q * x + x * x);
  EXPECT_EQ(q.pow(0), ParamPoly(1));
  EXPECT_EQ(-(q - x), x - q);
}

TEST(ParamPoly, Coefficients) {
  const ParamPoly p = 3 * q + 5 * x * x - 2;
  EXPECT_EQ(p.linear_coefficient("q"), Rational(3));
  EXPECT_EQ(p.linear_coefficient("x"), Rational(0));
  EXPECT_EQ(p.constant_term(), Rational(-2));
  EXPECT_EQ(p.total_degree(), 2u);
  EXPECT_EQ(p.symbols(), (std::set<std::string>{"q", "x"}));
}

TEST(ParamPoly, Substitution) {
  const ParamPoly d = 15 * x + 17 * mu;
  EXPECT_EQ(d.substitute("mu", ParamPoly::symbol("rho") - x), 17 * ParamPoly::symbol("rho") - 2 * x);
  EXPECT_EQ(d.substitute(chow::make_bindings({{"x", 5}, {"mu", -3}})), ParamPoly(24));
  EXPECT_EQ(*d.evaluate(chow::make_bindings({{"x", 1}, {"mu", 1}})), Rational(32));
  EXPECT_FALSE(d.evaluate(chow::make_bindings({{"x", 1}})).has_value());
}

TEST(ParamPoly, StandardParameters) {
  for (const char* n : {"q", "rho", "delta", "x", "mu", "v", "l", "k", "d", "g", "D", "r"}) {
    EXPECT_NE(chow::find_parameter(n), nullptr) << n;
  }
  EXPECT_EQ(chow::find_parameter("zeta"), nullptr);
}

}  // namespace
