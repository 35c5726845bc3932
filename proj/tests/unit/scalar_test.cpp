#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "minkring/errors.hpp"
#include "minkring/rational.hpp"
#include "minkring/scalar.hpp"
#include "random_objects.hpp"

namespace minkring {
namespace {

double approx(const Scalar& s) {
  return s.rational_part().get_d() + s.radical_part().get_d() * std::sqrt(2.0);
}

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(parse_rational("6/4"), Rational(3, 2));
  EXPECT_EQ(parse_rational("-7"), Rational(-7));
  EXPECT_EQ(to_string(Rational(-3, 2)), "-3/2");
  EXPECT_EQ(to_string(Rational(4)), "4");
  EXPECT_THROW(parse_rational("1/0"), Error);
  EXPECT_THROW(parse_rational("x"), ParseError);
}

TEST(Scalar, SignNearCancellation) {
  // 99/70 and 140/99 bracket sqrt2 closely: convergents of its continued fraction.
  EXPECT_EQ(Scalar(Rational(-99, 70), 1).sign(), -1);
  EXPECT_EQ(Scalar(Rational(-140, 99), 1).sign(), 1);
  EXPECT_EQ(Scalar(Rational(577, 408), -1).sign(), 1);
  EXPECT_EQ(Scalar(0, 0).sign(), 0);
  EXPECT_LT(Scalar(1), Scalar::sqrt2());
  EXPECT_LT(Scalar::sqrt2(), Scalar(Rational(3, 2)));
}

TEST(Scalar, SignAgreesWithFloatingPointAwayFromZero) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < testing::kIterations * 10; ++i) {
    Scalar s = testing::random_scalar(rng, true);
    double d = approx(s);
    if (std::abs(d) < 1e-9) {
      EXPECT_EQ(s.sign(), 0);
    } else {
      EXPECT_EQ(s.sign(), d > 0 ? 1 : -1) << s.to_string();
    }
  }
}

TEST(Scalar, FieldArithmetic) {
  Scalar r2 = Scalar::sqrt2();
  EXPECT_EQ(r2 * r2, Scalar(2));
  EXPECT_EQ((Scalar(1) + r2) * (Scalar(-1) + r2), Scalar(1));
  std::mt19937_64 rng(11);
  for (int i = 0; i < testing::kIterations; ++i) {
    Scalar a = testing::random_scalar(rng, true), b = testing::random_scalar(rng, true);
    EXPECT_NEAR(approx(a * b), approx(a) * approx(b), 1e-9);
    EXPECT_EQ(a + b - b, a);
  }
}

TEST(Scalar, TextRoundTrip) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < testing::kIterations; ++i) {
    Scalar a = testing::random_scalar(rng, true);
    std::string text = a.to_string();
    SCOPED_TRACE(text);
    EXPECT_EQ(parse_scalar(text), a);
  }
  EXPECT_EQ(Scalar::sqrt2().to_string(), "sqrt2");
  EXPECT_EQ(parse_scalar("1-2*sqrt2"), Scalar(1, -2));
  EXPECT_THROW(parse_scalar("sqrt3"), ParseError);
}

}  // namespace
}  // namespace minkring
