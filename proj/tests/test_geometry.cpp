#include <gtest/gtest.h>

#include "homdom/catalog.hpp"
#include "homdom/poly_io.hpp"
#include "support.hpp"

using namespace homdom;
using HP = HermitianPolynomial;

TEST(Hypersurface, RequiresRealDefiningFunction) {
  EXPECT_THROW(Hypersurface(HP::z(2, 0), "bad"), DomainError);
  EXPECT_THROW(SidedDomain(make_m(1), 0, "bad"), DomainError);
}

TEST(SideOf, ExactAndFloating) {
  const SidedDomain upper = make_quadric_domain(1, 1, 1);
  const std::vector<GaussianRational> in{0, 1}, on{1, 1}, out{2, 1};
  EXPECT_EQ(side_of(upper, in), Membership::inside);
  EXPECT_EQ(side_of(upper, on), Membership::on_boundary);
  EXPECT_EQ(side_of(upper, out), Membership::outside);
  const std::vector<ComplexFloat> near{{1.0, 0.0}, {1.0 + 1e-14, 0.0}};
  EXPECT_EQ(side_of(upper, near), Membership::on_boundary);
  EXPECT_EQ(side_of(make_quadric_domain(1, 1, -1), out), Membership::inside);
}

TEST(SideOf, InvariantUnderGroupElements) {
  Rng rng(41);
  for (int sign : {1, -1}) {
    const SidedDomain dom = make_d(sign, 1);
    for (int k = 0; k < 10; ++k) {
      const PParams p = random_p_params(rng, sign);
      const HoloPolyMap f = make_p_element(p);
      const auto pt = homdom::testing::random_point(rng, 4);
      EXPECT_EQ(side_of(dom, f.apply(pt)), side_of(dom, pt));
    }
  }
}

TEST(Levi, QuadricSignatureEverywhere) {
  Rng rng(42);
  const Hypersurface q = make_quadric(2, 3);
  for (int k = 0; k < 10; ++k) {
    auto prefix = homdom::testing::random_point(rng, 3);
    const auto pt = boundary_point_over(q, prefix, random_rational(rng, -2, 2));
    EXPECT_TRUE(evaluate<GaussianRational>(q.rho, pt).is_zero());
    EXPECT_EQ(levi_form_exact(q, pt).signature, (Inertia{2, 1, 0}));
    std::vector<ComplexFloat> ptf;
    for (const auto& c : pt) ptf.push_back(to_complex(c));
    const LeviData d = levi_form(q, ptf);
    EXPECT_EQ(d.signature(), (Inertia{2, 1, 0}));
    EXPECT_GT(d.spectrum.margin, 1e-9);
  }
}

TEST(Levi, TubeHessianCrossCheck) {
  // tube over x3 = x1^2 - x2^2: Levi form and real Hessian agree
  const HP f = parse_polynomial("z1^2 - z2^2", 2);
  const std::vector<double> x{0.3, -1.2};
  const auto hess = tube_hessian_signature(f, std::span<const double>(x));
  const Hypersurface tube(tube_rho(f), "tube");
  const std::vector<ComplexFloat> pt{{0.3, 2.0}, {-1.2, -1.0}, {0.09 - 1.44, 0.5}};
  EXPECT_EQ(levi_form(tube, pt).signature(), hess.inertia);
  EXPECT_EQ(hess.inertia, (Inertia{1, 1, 0}));
}

TEST(Levi, SingularPointThrows) {
  const Hypersurface s(parse_polynomial("z1*zb1 - z2*zb2", 2), "cone");
  const std::vector<ComplexFloat> origin{{0, 0}, {0, 0}};
  EXPECT_THROW(levi_form(s, origin), NotAHypersurfacePoint);
}

TEST(LineWitness, BallHasNoLineButLowerSideDoes) {
  const SidedDomain ball = make_quadric_domain(1, 1, 1);
  const std::vector<GaussianRational> base{0, 1}, dir{1, 0};
  const LineWitness w = contains_complex_line(ball, base, dir);
  EXPECT_FALSE(w.certified());
  ASSERT_TRUE(w.first_failure.has_value());
  const SidedDomain lower = make_quadric_domain(1, 1, -1);
  const std::vector<GaussianRational> base2{0, -1};
  EXPECT_TRUE(contains_complex_line(lower, base2, dir).certified());
  const std::vector<GaussianRational> zero{0, 0};
  EXPECT_THROW(contains_complex_line(lower, base2, zero), DomainError);
}

TEST(LineWitness, ConstantAlongStatedLine) {
  const auto line = stated_line("D_minus(side=<)");
  ASSERT_TRUE(line.has_value());
  const LineWitness w = contains_complex_line(make_d(-1, -1), line->base, line->direction);
  ASSERT_TRUE(w.constant_value.has_value());
  EXPECT_EQ(*w.constant_value, Rational(-1));
  EXPECT_TRUE(w.certified());
}
