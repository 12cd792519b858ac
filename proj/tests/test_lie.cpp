#include <gtest/gtest.h>

#include "homdom/lie.hpp"

using namespace homdom;

namespace {

MatrixC3 random_traceless(Rng& rng) {
  MatrixC3 x;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) x(i, j) = random_gaussian(rng, -3, 3, 3);
  x(2, 2) = -(x(0, 0) + x(1, 1));
  return x;
}

}  // namespace

TEST(Bracket, AntisymmetryAndJacobi) {
  Rng rng(61);
  for (int k = 0; k < 20; ++k) {
    const MatrixC3 x = random_traceless(rng), y = random_traceless(rng), z = random_traceless(rng);
    EXPECT_EQ(MatrixC3(bracket(x, y) + bracket(y, x)), MatrixC3::Zero());
    EXPECT_EQ(MatrixC3(bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y))),
              MatrixC3::Zero());
    EXPECT_EQ(killing(x, y), killing(y, x));
    EXPECT_EQ(killing(bracket(x, y), z), killing(x, bracket(y, z)));
  }
}

TEST(Sl3, KillingFormNonDegenerate) {
  EXPECT_EQ(sl3().dimension(), 8u);
  EXPECT_EQ(exact_rank(killing_gram(sl3_basis())), 8);
}

TEST(Sl3, AdKernelOnPerp) {
  for (const auto& c : jordan_test_set()) {
    const LieSubspace s = perp(LieSubspace({c.p}, Field::complex));
    EXPECT_EQ(s.dimension(), 7u);
    if (c.name == "E12") {
      EXPECT_GE(ad_kernel_dim(c.p, s), 4u);
      EXPECT_FALSE(is_subalgebra(s).closed);
    } else {
      EXPECT_LT(ad_kernel_dim(c.p, s), 4u) << c.name;
    }
  }
}

TEST(Sl3, CandidatePatterns) {
  for (const auto& s : {first_candidate(), second_candidate()}) {
    EXPECT_EQ(s.dimension(), 6u);
    EXPECT_TRUE(is_subalgebra(s).closed);
  }
  const LieSubspace upper = pattern_subalgebra({{{true, true, true}, {false, true, true}, {false, false, true}}});
  EXPECT_EQ(upper.dimension(), 5u);
  EXPECT_TRUE(is_subalgebra(upper).closed);
}

TEST(Unitary, Dimensions) {
  EXPECT_EQ(unitary_algebra(diag_form_21(), false).dimension(), 9u);
  EXPECT_EQ(unitary_algebra(diag_form_21(), true).dimension(), 8u);
}

TEST(Unitary, StabilizerDimensions) {
  Rng rng(62);
  VectorQi pos(3), neg(3), null(3);
  pos << GaussianRational(1), GaussianRational(0), GaussianRational(0);
  neg << GaussianRational(0), GaussianRational(0), GaussianRational(1);
  null << GaussianRational(1), GaussianRational(0), GaussianRational(1);
  const MatrixQi h = diag_form_21();
  for (int k = 0; k < 3; ++k) {
    const MatrixQi g = random_pseudo_unitary(rng);
    EXPECT_EQ(MatrixQi(adjoint_of(g) * h * g), h);
    EXPECT_EQ(stabilizer_up_to_scale_dim(VectorQi(g * pos), h), 4u);
    EXPECT_EQ(stabilizer_up_to_scale_dim(VectorQi(g * neg), h), 4u);
    EXPECT_EQ(stabilizer_up_to_scale_dim(VectorQi(g * null), h), 5u);
  }
  EXPECT_THROW(stabilizer_up_to_scale_dim(VectorQi::Zero(3), h), DomainError);
}

TEST(Isotropy, GeneratorsAndLineImage) {
  const LieSubspace s(isotropy_generators(), Field::real);
  EXPECT_EQ(s.dimension(), 6u);
  EXPECT_TRUE(is_subalgebra(s).closed);
  VectorQi v(3), w(3);
  v << GaussianRational(0), GaussianRational(2, 1), GaussianRational(0);
  w << GaussianRational(1), GaussianRational(0), GaussianRational(0);
  const auto rv = line_image_test(s, v);
  EXPECT_TRUE(rv.into_line);
  EXPECT_TRUE(rv.proportional_to_v);
  const auto rw = line_image_test(s, w);
  EXPECT_FALSE(rw.into_line);
  EXPECT_TRUE(rw.witness.has_value());
  EXPECT_FALSE(rw.proportional_to_v);
}

TEST(LieSubspace, RealVersusComplexSpan) {
  const MatrixC3 e = elementary(1, 2);
  const MatrixC3 ie = MatrixC3(e * GaussianRational::i());
  EXPECT_EQ(LieSubspace({e, ie}, Field::complex).dimension(), 1u);
  EXPECT_EQ(LieSubspace({e, ie}, Field::real).dimension(), 2u);
  EXPECT_FALSE(LieSubspace({e}, Field::real).contains(ie));
}
