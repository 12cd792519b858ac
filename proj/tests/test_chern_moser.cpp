#include <gtest/gtest.h>

#include "homdom/catalog.hpp"
#include "homdom/chern_moser.hpp"
#include "homdom/poly_io.hpp"

using namespace homdom;
using HP = HermitianPolynomial;

TEST(HermitianForm, Validation) {
  MatrixQi h = MatrixQi::Identity(2, 2);
  h(0, 1) = GaussianRational(1, 1);
  EXPECT_THROW(HermitianForm{h}, DomainError);
  EXPECT_THROW(HermitianForm{MatrixQi::Zero(2, 2)}, DomainError);
  EXPECT_EQ(HermitianForm::pairing().signature(), (Inertia{2, 1, 0}));
  EXPECT_EQ(HermitianForm::diagonal(1, 3).signature(), (Inertia{1, 2, 0}));
}

TEST(Trace, OfTheFormIsTheDimension) {
  for (const auto& form : {HermitianForm::pairing(), HermitianForm::diagonal(2, 3), HermitianForm::diagonal(1, 2)}) {
    const HP t = trace_op(form.polynomial(), form);
    EXPECT_EQ(t, HP::constant(form.dimension(), GaussianRational(static_cast<long>(form.dimension()))));
  }
}

TEST(Trace, SquareOfTheForm) {
  const HermitianForm form = HermitianForm::pairing();
  for (const Rational c : {Rational(1), Rational(3, 7), Rational(-2)}) {
    const CounterexampleTrace ce = counterexample_trace(form, c);
    EXPECT_TRUE(ce.matches);
    EXPECT_EQ(ce.trace, GaussianRational(8 * c) * form.polynomial());
  }
}

TEST(Trace, PowersCompose) {
  const HermitianForm form = HermitianForm::pairing();
  const HP p = parse_polynomial("z1^2*zb1*zb2 + 2*z3^2*zb3^2", 3);
  EXPECT_EQ(trace_power(p, form, 2), trace_op(trace_op(p, form), form));
}

TEST(NormalForm, ModelSurfaces) {
  for (int sign : {1, -1}) {
    const NormalFormSurface nf = normal_form_from_rho(m_rho(sign));
    EXPECT_TRUE(normal_form_check(nf).all_hold());
    const Umbilicity u = umbilicity_at_origin(nf);
    EXPECT_FALSE(u.umbilic);
    ASSERT_TRUE(u.witness.has_value());
    EXPECT_EQ(*u.witness, GaussianRational(sign) * parse_polynomial("z1^2*zb1^2", 3));
  }
  const NormalFormSurface flat = normal_form_from_rho(make_d0().rho);
  EXPECT_TRUE(umbilicity_at_origin(flat).umbilic);
}

TEST(NormalForm, TraceConditionCanFail) {
  const HP rho = HP::real_part(2, 1) - parse_polynomial("z1*zb1 + z1^2*zb1^2", 2);
  const NormalFormSurface nf = normal_form_from_rho(rho);
  EXPECT_FALSE(normal_form_check(nf).all_hold());
}

TEST(NormalForm, RejectsDisallowedBidegrees) {
  const HP rho = HP::real_part(2, 1) - parse_polynomial("z1*zb1 + z1^2 + zb1^2", 2);
  EXPECT_THROW(normal_form_from_rho(rho), DomainError);
}

TEST(Scaling, IsotropyAndNonIsotropy) {
  const NormalFormSurface nf = normal_form_from_rho(m_rho(1));
  PParams p = PParams::identity(1);
  p.q = 2;
  p.b = -1;
  p.d = 4;
  const ScalingReport good = linear_scaling_check(nf, make_isotropy_matrix(p), Rational(4));
  EXPECT_TRUE(good.preserves_form);
  EXPECT_TRUE(good.identity_holds);
  MatrixQi d = MatrixQi::Zero(3, 3);
  d(0, 0) = 2;
  d(1, 1) = Rational(1, 2);
  d(2, 2) = 1;
  const ScalingReport bad = linear_scaling_check(nf, d, Rational(1));
  EXPECT_TRUE(bad.preserves_form);
  EXPECT_FALSE(bad.identity_holds);
}
