#include <gtest/gtest.h>

#include "homdom/poly_io.hpp"
#include "support.hpp"

using namespace homdom;
using homdom::testing::random_point;
using homdom::testing::random_poly;
using HP = HermitianPolynomial;

TEST(Polynomial, RingAxioms) {
  Rng rng(21);
  for (int k = 0; k < 30; ++k) {
    const HP a = random_poly(rng, 2), b = random_poly(rng, 2), c = random_poly(rng, 2);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_TRUE((a - a).is_zero());
  }
}

TEST(Polynomial, EvaluationIsARingMap) {
  Rng rng(22);
  for (int k = 0; k < 30; ++k) {
    const HP a = random_poly(rng, 3), b = random_poly(rng, 3);
    const auto pt = random_point(rng, 3);
    const auto ea = evaluate<GaussianRational>(a, pt);
    const auto eb = evaluate<GaussianRational>(b, pt);
    EXPECT_EQ(evaluate<GaussianRational>(a * b, pt), ea * eb);
    EXPECT_EQ(evaluate<GaussianRational>(a + b, pt), ea + eb);
    EXPECT_EQ(evaluate<GaussianRational>(conjugate(a), pt), ea.conj());
  }
}

TEST(Polynomial, ConjugationAndRealValued) {
  Rng rng(23);
  for (int k = 0; k < 30; ++k) {
    const HP a = random_poly(rng, 2);
    EXPECT_EQ(conjugate(conjugate(a)), a);
    EXPECT_TRUE(is_real_valued(a + conjugate(a)));
  }
  EXPECT_TRUE(is_real_valued(HP::real_part(2, 1)));
  EXPECT_FALSE(is_real_valued(HP::z(2, 0)));
}

TEST(Polynomial, BigradedComponentsSumBack) {
  Rng rng(24);
  for (int k = 0; k < 30; ++k) {
    const HP a = random_poly(rng, 3, 6);
    HP sum(3);
    for (const auto& [kl, part] : bigraded_decomposition(a)) {
      for (const auto& [e, c] : part.terms()) EXPECT_EQ(bidegree(e), kl);
      sum += part;
    }
    EXPECT_EQ(sum, a);
  }
}

TEST(Polynomial, PartialDerivativeLeibniz) {
  Rng rng(25);
  for (int k = 0; k < 20; ++k) {
    const HP a = random_poly(rng, 2), b = random_poly(rng, 2);
    for (std::size_t v = 0; v < 4; ++v) EXPECT_EQ(partial(a * b, v), partial(a, v) * b + a * partial(b, v));
  }
}

TEST(Polynomial, SubstitutionAgreesWithEvaluation) {
  Rng rng(26);
  for (int k = 0; k < 20; ++k) {
    const HP p = random_poly(rng, 2);
    std::vector<HP> images{homdom::testing::random_holomorphic(rng, 2), homdom::testing::random_holomorphic(rng, 2)};
    images.push_back(conjugate(images[0]));
    images.push_back(conjugate(images[1]));
    const HP q = substitute(p, images);
    const auto pt = random_point(rng, 2);
    const std::vector<GaussianRational> inner{evaluate<GaussianRational>(images[0], pt),
                                              evaluate<GaussianRational>(images[1], pt)};
    EXPECT_EQ(evaluate<GaussianRational>(q, pt), evaluate<GaussianRational>(p, inner));
  }
}

TEST(PolyIo, PrintParseRoundTrip) {
  Rng rng(27);
  for (int k = 0; k < 50; ++k) {
    const HP p = random_poly(rng, 3, 5);
    EXPECT_EQ(parse_polynomial(to_string(p), 3), p);
  }
  EXPECT_EQ(to_string(HP(2)), "0");
}

TEST(PolyIo, LiteralGrammar) {
  const HP p = parse_polynomial("(3/5+4/5i)*z1^2*zb1^1 - 2*z2 + i", 2);
  HP expected = GaussianRational(Rational(3, 5), Rational(4, 5)) * HP::z(2, 0).pow(2) * HP::zbar(2, 0);
  expected -= GaussianRational(2) * HP::z(2, 1);
  expected += HP::constant(2, GaussianRational::i());
  EXPECT_EQ(p, expected);
  EXPECT_EQ(parse_polynomial("(z1+zb1)^2", 1), (HP::z(1, 0) + HP::zbar(1, 0)).pow(2));
  EXPECT_THROW(parse_polynomial("z3", 2), ParseError);
  EXPECT_THROW(parse_polynomial("z1 +", 2), ParseError);
  EXPECT_THROW(parse_polynomial("(z1", 2), ParseError);
}

TEST(PolyIo, Lists) {
  const auto qs = parse_rational_list("1, -2/3 4");
  ASSERT_EQ(qs.size(), 3u);
  EXPECT_EQ(qs[1], Rational(-2, 3));
  const auto ws = parse_gaussian_list("1+i, -i, 3/2");
  ASSERT_EQ(ws.size(), 3u);
  EXPECT_EQ(ws[0], GaussianRational(1, 1));
  EXPECT_EQ(parse_gaussian("-1/2i"), GaussianRational(Rational(0), Rational(-1, 2)));
}

TEST(Polynomial, SpaceMismatchThrows) {
  EXPECT_THROW(HP::z(2, 0) + HP::z(3, 0), SpaceError);
}

TEST(Polynomial, FloatConversion) {
  const HP p = parse_polynomial("1/4*z1*zb1 + (1-i)*z2", 2);
  const auto f = convert<ComplexFloat>(p);
  const std::vector<ComplexFloat> pt{{2.0, 0.0}, {1.0, 1.0}};
  const ComplexFloat v = evaluate<ComplexFloat>(f, pt);
  EXPECT_NEAR(v.real(), 1.0 + 2.0, 1e-15);
  EXPECT_NEAR(v.imag(), 0.0, 1e-15);
}
