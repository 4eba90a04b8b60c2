#include <gtest/gtest.h>

#include "generators.hpp"
#include "jcm/errors.hpp"
#include "jcm/rational.hpp"

using jcm::Rational;

TEST(Rational, ParsesFractionsIntegersAndDecimals) {
  EXPECT_EQ(jcm::parse_rational("3/4"), Rational(3, 4));
  EXPECT_EQ(jcm::parse_rational("-6/8"), Rational(-3, 4));
  EXPECT_EQ(jcm::parse_rational("17"), Rational(17));
  EXPECT_EQ(jcm::parse_rational("4.5"), Rational(9, 2));
  EXPECT_EQ(jcm::parse_rational("1e-3"), Rational(1, 1000));
  EXPECT_EQ(jcm::parse_rational("2.5E2"), Rational(250));
}

TEST(Rational, RejectsMalformedText) {
  for (const char* bad : {"1/0", "", "abc", "1/", "/2", "1.2.3", "3/4x"})
    EXPECT_THROW(jcm::parse_rational(bad), jcm::ParseError) << bad;
}

TEST(Rational, ToStringRoundTrips) {
  gen::Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    Rational q = gen::signed_rational(rng, 1000, 97);
    EXPECT_EQ(jcm::parse_rational(jcm::to_string(q)), q);
    EXPECT_TRUE(jcm::is_canonical(q));
  }
}

TEST(Rational, LongDoubleConversionIsAccurate) {
  Rational q(1, 3);
  EXPECT_NEAR(static_cast<double>(jcm::to_long_double(q)), 1.0 / 3.0, 1e-17);
  Rational big = Rational(mpz_class("123456789012345678901234567890"), mpz_class("7"));
  long double expect = 123456789012345678901234567890.0L / 7.0L;
  EXPECT_NEAR(static_cast<double>(jcm::to_long_double(big) / expect), 1.0, 1e-17);
  EXPECT_EQ(jcm::to_long_double(Rational(0)), 0.0L);
  EXPECT_LT(jcm::to_long_double(Rational(-5, 2)), 0.0L);
}

TEST(Rational, SignAndMake) {
  EXPECT_EQ(jcm::sign(jcm::make_rational(-3, 7)), -1);
  EXPECT_EQ(jcm::sign(jcm::make_rational(0, 7)), 0);
  EXPECT_EQ(jcm::make_rational(6, -4), Rational(-3, 2));
}
