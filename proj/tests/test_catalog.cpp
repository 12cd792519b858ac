#include <gtest/gtest.h>

#include "homdom/catalog.hpp"
#include "homdom/poly_io.hpp"

using namespace homdom;
using HP = HermitianPolynomial;

TEST(Generators, OneParameterGroups) {
  const Rational alpha(1, 3);
  const Rational a(2, 3), b(-5, 4);
  for (auto kind : {GeneratorKind::psi, GeneratorKind::mu, GeneratorKind::nu})
    EXPECT_EQ(compose(make_generator(kind, alpha, a), make_generator(kind, alpha, b)),
              make_generator(kind, alpha, a + b))
        << to_string(kind);
  EXPECT_EQ(compose(make_generator(GeneratorKind::phi, alpha, a), make_generator(GeneratorKind::phi, alpha, b)),
            make_generator(GeneratorKind::phi, alpha, a * b));
  EXPECT_THROW(make_generator(GeneratorKind::phi, alpha, Rational(0)), DomainError);
}

TEST(Generators, PreserveTheTube) {
  for (const Rational alpha : {Rational(0), Rational(1, 12), Rational(-2)}) {
    const HP rho = make_gamma(alpha).rho;
    for (auto kind : {GeneratorKind::phi, GeneratorKind::psi, GeneratorKind::mu, GeneratorKind::nu}) {
      const Rational p(3, 2);
      const auto cert = invariance_certificate(rho, lift_affine(make_generator(kind, alpha, p)));
      EXPECT_TRUE(cert.exact);
      EXPECT_EQ(cert.factor, GaussianRational(kind == GeneratorKind::phi ? p.pow(4) : Rational(1)));
    }
  }
}

TEST(Transitivity, RegressionPoint) {
  const std::vector<Rational> target{1, 0, 0, 2};
  const auto sol = transitive_params_omega(Rational(1), target);
  ASSERT_TRUE(sol.has_value());
  EXPECT_EQ(sol->q, Rational(1));
  EXPECT_EQ(sol->r, Rational(1));
  EXPECT_EQ(sol->s, Rational(6));
  EXPECT_EQ(sol->t, Rational(2));
  const std::vector<Rational> below{0, 0, 0, -1};
  EXPECT_THROW(transitive_params_omega(Rational(1), below), DomainError);
  const std::vector<Rational> irrational{0, 0, 0, 2};
  EXPECT_FALSE(transitive_params_omega(Rational(1), irrational).has_value());
}

TEST(PGroup, ConstraintValidation) {
  PParams p = PParams::identity(1);
  p.q = 2;
  p.b = -1;
  p.d = 4;
  EXPECT_NO_THROW(p.validate());
  p.d = 5;
  EXPECT_EQ(p.constraint_defect(), Rational(9));
  EXPECT_THROW(make_p_element(p), ConstraintError);
  p.d = 4;
  p.q = -2;
  EXPECT_THROW(p.validate(), ConstraintError);
}

TEST(PGroup, ComposeInverseRecover) {
  Rng rng(51);
  for (int sign : {1, -1}) {
    for (int k = 0; k < 5; ++k) {
      const PParams a = random_p_params(rng, sign);
      const PParams b = random_p_params(rng, sign);
      EXPECT_EQ(recover_p_params(make_p_element(a), sign), a);
      EXPECT_EQ(make_p_element(p_compose(a, b)), compose(make_p_element(a), make_p_element(b)));
      EXPECT_EQ(p_compose(a, p_inverse(a)), PParams::identity(sign));
      EXPECT_EQ(p_inverse(a).q, Rational(1) / a.q);
    }
  }
}

TEST(PGroup, RecoverRejectsForeignMaps) {
  const HoloPolyMap f(4, {HP::z(4, 0), HP::z(4, 1), HP::z(4, 2), HP::z(4, 3) + HP::z(4, 0).pow(3)});
  EXPECT_THROW(recover_p_params(f, 1), ClosureViolation);
}

TEST(PGroup, IsotropyMatrixPreservesPairing) {
  PParams p = PParams::identity(1);
  p.q = 2;
  p.b = -1;
  p.d = 4;
  const MatrixQi u = make_isotropy_matrix(p);
  const MatrixQi h = pairing_form();
  EXPECT_EQ(MatrixQi(u.transpose() * h * conjugate_of(u)), h);
  EXPECT_EQ(u(0, 0), GaussianRational(Rational(1, 2)));
  EXPECT_EQ(u(1, 1), GaussianRational(2));
}

TEST(PGroup, ChartJacobianRank) {
  const Eigen::MatrixXd j = p_chart_jacobian(1);
  const Eigen::JacobiSVD<Eigen::MatrixXd> svd(j);
  const auto sv = svd.singularValues();
  int rank = 0;
  for (Eigen::Index k = 0; k < sv.size(); ++k) rank += sv(k) > 1e-8 * sv(0);
  EXPECT_EQ(rank, kPChartDimension);
}

TEST(Quadric, TransitiveActionExact) {
  QuadricParams qp;
  qp.a = Rational(3, 2);
  qp.b = {GaussianRational(1, -1), GaussianRational(Rational(1, 2))};
  qp.c = Rational(-2);
  const HoloPolyMap f = quadric_transitive_map(1, 2, qp);
  const auto cert = invariance_certificate(make_quadric(1, 2).rho, f);
  EXPECT_TRUE(cert.exact);
  EXPECT_EQ(cert.factor, GaussianRational(Rational(9, 4)));
  const auto target = f.apply(quadric_base_point(2, 1));
  const auto sol = quadric_transitive_params(1, 2, 1, target);
  ASSERT_TRUE(sol.has_value());
  EXPECT_EQ(quadric_transitive_map(1, 2, *sol).apply(quadric_base_point(2, 1)), target);
  EXPECT_THROW(make_quadric(3, 2), DomainError);
}

TEST(Equivalences, CertifyExactly) {
  for (const Rational alpha : {Rational(7, 12), Rational(-1, 4), Rational(1, 12)}) {
    const auto cert = certify(make_normalizer(alpha));
    EXPECT_TRUE(cert.holds());
    EXPECT_EQ(cert.exact.factor, GaussianRational(4));
  }
  EXPECT_EQ(normalizer_target_sign(Rational(7, 12)), 1);
  EXPECT_EQ(normalizer_target_sign(Rational(-1, 4)), -1);
  EXPECT_EQ(normalizer_target_sign(Rational(1, 12)), 0);
  EXPECT_TRUE(certify(make_cayley_equivalence()).holds());
  EXPECT_TRUE(certify(make_tube_realisation(2, 3)).holds());
}

TEST(Sigma, RangeIsEnforced) {
  EXPECT_NO_THROW(sigma_graph(1.0));
  EXPECT_THROW(sigma_graph(0.5), DomainError);
  EXPECT_THROW(sigma_graph(kSigmaUpper), DomainError);
}

TEST(Registry, ParseResolveDescribe) {
  const RegistryId id = parse_registry_id("quadric(p=2, n=3, side=>)");
  EXPECT_EQ(id.name, "quadric");
  EXPECT_EQ(id.args.at("n"), "3");
  EXPECT_EQ(parse_registry_id(id.str()).str(), id.str());
  EXPECT_EQ(parse_registry_id("sigma(σ=2)").args.at("sigma"), "2");
  EXPECT_THROW(resolve("unknown"), ParseError);
  EXPECT_THROW(resolve("gamma(beta=1)"), ParseError);
  EXPECT_THROW(resolve("gamma(alpha=1"), ParseError);
  EXPECT_NE(describe("M_plus").find("z1^2*zb1^2"), std::string::npos);
  EXPECT_NE(describe("cayley").find("rho"), std::string::npos);
  EXPECT_NE(describe("sigma(σ=1)").find("graph"), std::string::npos);
  for (const auto& entry : list_registry()) EXPECT_NO_THROW(resolve(entry.example_id)) << entry.example_id;
}

TEST(Registry, StatedLines) {
  EXPECT_TRUE(stated_line("D_plus(side=>)").has_value());
  EXPECT_TRUE(stated_line("quadric(p=1,n=1,side=<)").has_value());
  EXPECT_FALSE(stated_line("quadric(p=1,n=1,side=>)").has_value());
  EXPECT_FALSE(stated_line("cayley").has_value());
}
