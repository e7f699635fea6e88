#include <gtest/gtest.h>

#include "gvn/error.hpp"
#include "gvn/exact.hpp"

using gvn::ExactComplex;
using gvn::Rational;

TEST(ExactComplex, Arithmetic) {
  ExactComplex a(Rational(1, 2), 3);
  ExactComplex b(2, Rational(-1, 3));
  EXPECT_EQ(a + b, ExactComplex(Rational(5, 2), Rational(8, 3)));
  // (1/2 + 3i)(2 - i/3) = 1 + 1 + (6 - 1/6)i
  EXPECT_EQ(a * b, ExactComplex(2, Rational(35, 6)));
  EXPECT_EQ(a.conj(), ExactComplex(Rational(1, 2), -3));
  EXPECT_EQ(a.norm(), Rational(37, 4));
  EXPECT_TRUE((a - a).is_zero());
  EXPECT_EQ(ExactComplex::i() * ExactComplex::i(), ExactComplex(-1));
}

TEST(ExactComplex, ParseForms) {
  EXPECT_EQ(ExactComplex::parse("3"), ExactComplex(3));
  EXPECT_EQ(ExactComplex::parse("-1/2"), ExactComplex(Rational(-1, 2)));
  EXPECT_EQ(ExactComplex::parse("i"), ExactComplex::i());
  EXPECT_EQ(ExactComplex::parse("-i"), ExactComplex(0, -1));
  EXPECT_EQ(ExactComplex::parse("2/3i"), ExactComplex(0, Rational(2, 3)));
  EXPECT_EQ(ExactComplex::parse("1/2+3i"), ExactComplex(Rational(1, 2), 3));
  EXPECT_EQ(ExactComplex::parse("1-i"), ExactComplex(1, -1));
  EXPECT_EQ(ExactComplex::parse("4/8"), ExactComplex(Rational(1, 2)));
}

TEST(ExactComplex, ParseRejects) {
  EXPECT_THROW(ExactComplex::parse(""), gvn::ParseError);
  EXPECT_THROW(ExactComplex::parse("1/0"), gvn::ParseError);
  EXPECT_THROW(ExactComplex::parse("abc"), gvn::ParseError);
  EXPECT_THROW(ExactComplex::parse("1.5"), gvn::ParseError);
}

TEST(ExactComplex, RoundTripThroughStr) {
  for (const char* text : {"0", "3", "-1/2", "i", "-2/3i", "1/2+3i", "-5-7/4i"}) {
    ExactComplex z = ExactComplex::parse(text);
    EXPECT_EQ(ExactComplex::parse(z.str()), z) << text;
  }
}

TEST(ExactComplex, ToComplex) {
  auto z = ExactComplex(Rational(1, 4), Rational(-3, 8)).to_complex();
  EXPECT_DOUBLE_EQ(z.real(), 0.25);
  EXPECT_DOUBLE_EQ(z.imag(), -0.375);
}
