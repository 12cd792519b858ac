#include <gtest/gtest.h>

#include "homdom/errors.hpp"
#include "homdom/gaussian.hpp"
#include "homdom/random.hpp"
#include "homdom/scalar.hpp"

using namespace homdom;

TEST(Rational, CanonicalForm) {
  const Rational r(6, -4);
  EXPECT_EQ(r.str(), "-3/2");
  EXPECT_EQ(r.fraction_str(), "-3/2");
  EXPECT_EQ(Rational(4, 2).str(), "2");
  EXPECT_EQ(Rational(4, 2).fraction_str(), "2/1");
  EXPECT_EQ(Rational(0).fraction_str(), "0/1");
  EXPECT_TRUE(Rational(4, 2).is_integer());
}

TEST(Rational, ParseRoundTrip) {
  for (const char* s : {"0", "7", "-7", "3/5", "-12/7"}) EXPECT_EQ(Rational::parse(s).str(), s);
  EXPECT_EQ(Rational::parse("6/8"), Rational(3, 4));
  EXPECT_THROW(Rational::parse("1/0"), Error);
  EXPECT_THROW(Rational::parse("abc"), Error);
}

TEST(Rational, FieldAxiomsOnRandomSamples) {
  Rng rng(11);
  for (int k = 0; k < 200; ++k) {
    const Rational a = random_rational(rng, -9, 9, 12);
    const Rational b = random_rational(rng, -9, 9, 12);
    const Rational c = random_rational(rng, -9, 9, 12);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a - a, Rational(0));
    if (!b.is_zero()) EXPECT_EQ(a / b * b, a);
  }
}

TEST(Rational, Roots) {
  EXPECT_EQ(sqrt_exact(Rational(9, 4)), Rational(3, 2));
  EXPECT_FALSE(sqrt_exact(Rational(2)).has_value());
  EXPECT_THROW(sqrt_exact(Rational(-1)), DomainError);
  EXPECT_EQ(root_exact(Rational(16, 81), 4), Rational(2, 3));
  EXPECT_EQ(root_exact(Rational(-8), 3), Rational(-2));
  EXPECT_THROW(root_exact(Rational(-16), 4), DomainError);
  EXPECT_NEAR(nth_root_float(2.0, 4), 1.189207115002721, 1e-12);
}

TEST(Rational, Ordering) {
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_EQ(Rational(-5, 2).abs(), Rational(5, 2));
  EXPECT_EQ(Rational(2, 3).pow(-2), Rational(9, 4));
}

TEST(Gaussian, ArithmeticAndConjugation) {
  Rng rng(3);
  for (int k = 0; k < 200; ++k) {
    const GaussianRational a = random_gaussian(rng, -5, 5, 6);
    const GaussianRational b = random_gaussian(rng, -5, 5, 6);
    EXPECT_EQ((a * b).conj(), a.conj() * b.conj());
    EXPECT_EQ((a * b).norm2(), a.norm2() * b.norm2());
    EXPECT_TRUE((a * a.conj()).is_real());
    if (!b.is_zero()) EXPECT_EQ(a / b * b, a);
  }
  EXPECT_EQ(GaussianRational::i() * GaussianRational::i(), GaussianRational(-1));
  EXPECT_THROW(GaussianRational(0).inverse(), DomainError);
}

TEST(Gaussian, Printing) {
  EXPECT_EQ(GaussianRational(Rational(3, 5), Rational(4, 5)).str(), "3/5+4/5i");
  EXPECT_EQ(GaussianRational(0, -1).str(), "-i");
  EXPECT_EQ(GaussianRational(2).str(), "2");
}

TEST(UnimodularPhase, RationalPointsOfTheCircle) {
  Rng rng(5);
  for (int k = 0; k < 50; ++k) {
    const auto e = UnimodularPhase::from_parameter(random_rational(rng, -4, 4, 7));
    EXPECT_EQ(e.value().norm2(), Rational(1));
    EXPECT_EQ((e * e.conj()).value(), GaussianRational(1));
  }
  EXPECT_THROW(UnimodularPhase(GaussianRational(1, 1)), DomainError);
}

TEST(Scalar, CastIsOneWay) {
  const GaussianRational w(Rational(1, 4), Rational(-3, 2));
  const auto z = scalar_cast<ComplexFloat>(w);
  EXPECT_DOUBLE_EQ(z.real(), 0.25);
  EXPECT_DOUBLE_EQ(z.imag(), -1.5);
  EXPECT_TRUE(ScalarTraits<GaussianRational>::exact);
  EXPECT_FALSE(ScalarTraits<ComplexFloat>::exact);
}
