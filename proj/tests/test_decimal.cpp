#include <gtest/gtest.h>

#include <limits>
#include <random>
#include <stdexcept>

#include "iqa/decimal.hpp"
#include "iqa/errors.hpp"

using iqa::Error;
using iqa::ErrorCode;
using iqa::Hundredths;
using iqa::Rational;

TEST(Rational, NormalizesSignAndGcd) {
  const Rational r(6, -8);
  EXPECT_EQ(r.numerator(), -3);
  EXPECT_EQ(r.denominator(), 4);
  EXPECT_EQ(Rational(0, -5), Rational(0));
  EXPECT_THROW(Rational(1, 0), std::domain_error);
}

TEST(Rational, Arithmetic) {
  EXPECT_EQ(Rational(1, 3) + Rational(1, 6), Rational(1, 2));
  EXPECT_EQ(Rational(1, 3) - Rational(1, 2), Rational(-1, 6));
  EXPECT_EQ(Rational(2, 3) * Rational(9, 4), Rational(3, 2));
  EXPECT_EQ(Rational(2, 3) / Rational(4, 9), Rational(3, 2));
  EXPECT_EQ(-Rational(5, 7), Rational(-5, 7));
  EXPECT_LT(Rational(1, 3), Rational(34, 100));
  EXPECT_GT(Rational(-1, 3), Rational(-34, 100));
}

TEST(Rational, ParseForms) {
  EXPECT_EQ(Rational::parse("12"), Rational(12));
  EXPECT_EQ(Rational::parse("-3.125"), Rational(-25, 8));
  EXPECT_EQ(Rational::parse("0.50"), Rational(1, 2));
  EXPECT_EQ(Rational::parse("7/21"), Rational(1, 3));
  EXPECT_THROW(Rational::parse(""), Error);
  EXPECT_THROW(Rational::parse("1.2.3"), Error);
  EXPECT_THROW(Rational::parse("abc"), Error);
  EXPECT_THROW(Rational::parse("1/0"), Error);
}

TEST(Rational, FixedRoundingIsHalfAwayFromZero) {
  EXPECT_EQ(Rational(54375, 1000).to_fixed(2), "54.38");
  EXPECT_EQ(Rational(-54375, 1000).to_fixed(2), "-54.38");
  EXPECT_EQ(Rational(54374, 1000).to_fixed(2), "54.37");
  EXPECT_EQ(Rational(715, 12).to_fixed(2), "59.58");
  EXPECT_EQ(Rational(1, 8).to_fixed(2), "0.13");
  EXPECT_EQ(Rational(5).to_fixed(2), "5.00");
  EXPECT_EQ(Rational(1, 3).to_fixed(0), "0");
  EXPECT_EQ(Rational(1, 2).to_fixed(0), "1");
}

TEST(Rational, GrowsBeyondSixtyFourBits) {
  const Rational big(std::numeric_limits<std::int64_t>::max());
  const Rational square = big * big;
  EXPECT_EQ(square / big, big);
  EXPECT_EQ((big + big).to_string(), "18446744073709551614");
  // Sum of 1/p over the first primes: denominator is their product.
  Rational sum;
  for (std::int64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61}) {
    sum += Rational(1, p);
  }
  EXPECT_EQ(sum.denominator().str(), "117288381359406970983270");
  EXPECT_LT(sum, Rational(2));
}

TEST(Rational, ToStringRoundTripsThroughParse) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> num(-100000, 100000), den(1, 5000);
  for (int i = 0; i < 1000; ++i) {
    const Rational r(num(rng), den(rng));
    EXPECT_EQ(Rational::parse(r.to_string()), r);
  }
}

TEST(Hundredths, ParseAcceptsAtMostTwoDecimals) {
  EXPECT_EQ(Hundredths::parse("0.56").units(), 56);
  EXPECT_EQ(Hundredths::parse("1").units(), 100);
  EXPECT_EQ(Hundredths::parse("1.0").units(), 100);
  EXPECT_EQ(Hundredths::parse(".5").units(), 50);
  EXPECT_EQ(Hundredths::parse("89.79").units(), 8979);
  try {
    Hundredths::parse("0.565");
    FAIL() << "three decimals accepted";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::PrecisionError);
  }
  try {
    Hundredths::parse("0,56");
    FAIL() << "comma accepted";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidArgument);
  }
}

TEST(Hundredths, ToStringAndRational) {
  EXPECT_EQ(Hundredths(5).to_string(), "0.05");
  EXPECT_EQ(Hundredths(100).to_string(), "1.00");
  EXPECT_EQ(Hundredths(8979).to_string(), "89.79");
  EXPECT_EQ(Hundredths(56).to_rational(), Rational(14, 25));
  for (std::int64_t u = 0; u <= 10000; ++u) {
    ASSERT_EQ(Hundredths::parse(Hundredths(u).to_string()).units(), u);
  }
}

TEST(Hundredths, RoundToHundredths) {
  EXPECT_EQ(iqa::round_to_hundredths(Rational(54375, 1000)).units(), 5438);
  EXPECT_EQ(iqa::round_to_hundredths(Rational(63, 100)).units(), 63);
  EXPECT_EQ(iqa::round_to_hundredths(Rational(1, 8)).units(), 13);
  EXPECT_EQ(iqa::round_to_hundredths(Rational(-1, 8)).units(), -13);
}
