#include <gtest/gtest.h>

#include "homdom/maps.hpp"
#include "homdom/poly_io.hpp"
#include "support.hpp"

using namespace homdom;
using HP = HermitianPolynomial;

namespace {

HoloPolyMap random_map(Rng& rng, std::size_t n) {
  std::vector<HP> comps;
  for (std::size_t i = 0; i < n; ++i) comps.push_back(homdom::testing::random_holomorphic(rng, n, 2));
  return HoloPolyMap(n, comps);
}

}  // namespace

TEST(PolyMap, RejectsAntiholomorphicComponents) {
  EXPECT_THROW(HoloPolyMap(1, {HP::zbar(1, 0)}), SpaceError);
  EXPECT_THROW(HoloPolyMap(2, {HP::z(1, 0)}), SpaceError);
}

TEST(PolyMap, CompositionIsAssociative) {
  Rng rng(31);
  for (int k = 0; k < 10; ++k) {
    const auto f = random_map(rng, 2), g = random_map(rng, 2), h = random_map(rng, 2);
    EXPECT_EQ(compose(compose(f, g), h), compose(f, compose(g, h)));
    EXPECT_EQ(compose(f, HoloPolyMap::identity(2)), f);
    EXPECT_EQ(compose(HoloPolyMap::identity(2), f), f);
  }
}

TEST(PolyMap, PullbackIsFunctorial) {
  Rng rng(32);
  for (int k = 0; k < 10; ++k) {
    const auto f = random_map(rng, 2), g = random_map(rng, 2);
    const HP rho = homdom::testing::random_poly(rng, 2, 3);
    EXPECT_EQ(pullback(rho, compose(f, g)), pullback(pullback(rho, f), g));
  }
}

TEST(PolyMap, ApplyMatchesComposition) {
  Rng rng(33);
  const auto f = random_map(rng, 3), g = random_map(rng, 3);
  const auto pt = homdom::testing::random_point(rng, 3);
  EXPECT_EQ(compose(f, g).apply(pt), f.apply(g.apply(pt)));
}

TEST(InvertTriangular, RoundTrip) {
  // z1 -> 2 z1 + 1, z2 -> z2 + z1^2, z3 -> -z3 + z1 z2
  const HoloPolyMap f(3, {parse_polynomial("2*z1 + 1", 3), parse_polynomial("z2 + z1^2", 3),
                          parse_polynomial("-z3 + z1*z2", 3)});
  const std::vector<std::size_t> order{0, 1, 2};
  const HoloPolyMap g = invert_triangular(f, order);
  EXPECT_EQ(compose(f, g), HoloPolyMap::identity(3));
  EXPECT_EQ(compose(g, f), HoloPolyMap::identity(3));
  const HoloPolyMap bad(2, {parse_polynomial("z1 + z2", 2), parse_polynomial("z2", 2)});
  const std::vector<std::size_t> order2{0, 1};
  EXPECT_THROW(invert_triangular(bad, order2), DomainError);
}

TEST(Certificate, DetectsFactorAndResidual) {
  const HP rho = parse_polynomial("1/2*z2 + 1/2*zb2 - z1*zb1", 2);
  // z1 -> 3 z1, z2 -> 9 z2 scales rho by 9
  const HoloPolyMap f(2, {parse_polynomial("3*z1", 2), parse_polynomial("9*z2", 2)});
  const auto cert = invariance_certificate(rho, f);
  EXPECT_TRUE(cert.exact);
  EXPECT_EQ(cert.factor, GaussianRational(9));
  const HoloPolyMap g(2, {parse_polynomial("3*z1", 2), parse_polynomial("8*z2", 2)});
  const auto bad = invariance_certificate(rho, g);
  EXPECT_FALSE(bad.exact);
  EXPECT_FALSE(bad.residual.is_zero());
  const auto fc = invariance_certificate(convert<ComplexFloat>(rho), convert<ComplexFloat>(f));
  EXPECT_TRUE(fc.holds);
  EXPECT_THROW(invariance_certificate(HP(2), f), DomainError);
}

TEST(Affine, ComposeAndLift) {
  AffineMapR a{MatrixQ::Identity(2, 2), VectorQ::Constant(2, Rational(1))};
  a.matrix(0, 1) = Rational(2);
  const AffineMapR b{MatrixQ::Identity(2, 2) * Rational(3), VectorQ::Constant(2, Rational(-1))};
  const AffineMapR ab = compose(a, b);
  EXPECT_EQ(lift_affine(ab), compose(lift_affine(a), lift_affine(b)));
  EXPECT_EQ(determinant(ab), determinant(a) * determinant(b));
}

TEST(RadicalScalar, Arithmetic) {
  const auto s = RadicalScalar::power(2, Rational(1, 2));
  EXPECT_EQ((s * s).to_rational(), Rational(2));
  EXPECT_FALSE(s.to_rational().has_value());
  EXPECT_EQ(s.str(), "2^(1/2)");
  EXPECT_NEAR(RadicalScalar::power(Rational(3, 4), Rational(1, 4)).to_double(), std::pow(0.75, 0.25), 1e-15);
  EXPECT_EQ(RadicalScalar::power(12, Rational(1, 2)), RadicalScalar::power(2, 1) * RadicalScalar::power(3, Rational(1, 2)));
  EXPECT_EQ(RadicalScalar().str(), "1");
  EXPECT_THROW(RadicalScalar::power(-2, Rational(1, 2)), DomainError);
}

TEST(RadicalScalar, RescaleVariables) {
  const HP rho = parse_polynomial("z1*zb1 - 1/2*z2 - 1/2*zb2", 2);
  const std::vector<RadicalScalar> scale{RadicalScalar::power(2, Rational(1, 2)), RadicalScalar::rational(2)};
  EXPECT_EQ(rescale_variables(rho, scale), parse_polynomial("2*z1*zb1 - z2 - zb2", 2));
  const HP odd = parse_polynomial("z1", 2);
  EXPECT_THROW(rescale_variables(odd, scale), DomainError);
}
