#include <gtest/gtest.h>

#include "loopmod/errors.hpp"
#include "loopmod/scalar.hpp"

using loopmod::Scalar;

TEST(Scalar, ParsesAndPrintsCanonicalForm) {
  EXPECT_EQ(Scalar::parse("6/4").str(), "3/2");
  EXPECT_EQ(Scalar::parse("-2").str(), "-2");
  EXPECT_EQ(Scalar::parse("0/5").str(), "0");
}

TEST(Scalar, RejectsMalformedInput) {
  EXPECT_THROW(Scalar::parse("1/0"), loopmod::InvalidArgument);
  EXPECT_THROW(Scalar::parse("abc"), loopmod::InvalidArgument);
  EXPECT_THROW(Scalar::parse("0.5"), loopmod::InvalidArgument);
}

TEST(Scalar, ExactArithmetic) {
  const Scalar a = Scalar::parse("1/3");
  const Scalar b = Scalar::parse("1/6");
  EXPECT_EQ(a + b, Scalar::parse("1/2"));
  EXPECT_EQ(a * b, Scalar::parse("1/18"));
  EXPECT_EQ(a / b, Scalar(2));
  EXPECT_TRUE((a - a).is_zero());
  EXPECT_EQ(pow(Scalar(-2), 3), Scalar(-8));
  EXPECT_EQ(pow(Scalar(2), -2), Scalar::parse("1/4"));
  EXPECT_EQ(loopmod::factorial(5), Scalar(120));
}

TEST(Scalar, IntegralityAndFloor) {
  EXPECT_TRUE(Scalar(4).is_integer());
  EXPECT_FALSE(Scalar::parse("7/2").is_integer());
  EXPECT_EQ(Scalar::parse("-7/2").floor(), Scalar(-4));
  EXPECT_EQ(Scalar::parse("7/2").floor(), Scalar(3));
  EXPECT_LT(Scalar::parse("1/3"), Scalar::parse("1/2"));
}
