#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "homdom/eigen_support.hpp"
#include "homdom/linalg.hpp"
#include "homdom/random.hpp"

namespace homdom {

using MatrixC3 = Matrix<GaussianRational, 3, 3>;

/// E_{ij} with 1-based indices.
MatrixC3 elementary(int i, int j);
MatrixC3 diag3(const GaussianRational& a, const GaussianRational& b, const GaussianRational& c);

MatrixC3 bracket(const MatrixC3& x, const MatrixC3& y);
/// trace(XY).
GaussianRational killing(const MatrixC3& x, const MatrixC3& y);

enum class Field { complex, real };

/// Span of linearly independent 3x3 matrices over C or R.
class LieSubspace {
 public:
  LieSubspace() = default;
  /// Keeps a maximal independent subset of `spanning`, in order.
  LieSubspace(std::vector<MatrixC3> spanning, Field field);

  const std::vector<MatrixC3>& basis() const { return basis_; }
  Field field() const { return field_; }
  std::size_t dimension() const { return basis_.size(); }
  bool contains(const MatrixC3& x) const;

 private:
  std::vector<MatrixC3> basis_;
  Field field_ = Field::complex;
};

/// E12, E13, E21, E23, E31, E32, E11 - E22, E22 - E33.
std::vector<MatrixC3> sl3_basis();
LieSubspace sl3();
/// Gram matrix of the Killing form on a list of matrices.
MatrixQi killing_gram(const std::vector<MatrixC3>& xs);

/// Killing-orthogonal complement inside sl(3, C).
LieSubspace perp(const LieSubspace& s);
/// dim {X in S : [P, X] = 0}.
std::size_t ad_kernel_dim(const MatrixC3& p, const LieSubspace& s);

struct SubalgebraResult {
  bool closed = true;
  std::optional<std::pair<std::size_t, std::size_t>> witness;  ///< basis indices whose bracket escapes
};

SubalgebraResult is_subalgebra(const LieSubspace& s);

/// Traceless matrices with zeros outside `mask` (mask(i,j) true = free entry).
LieSubspace pattern_subalgebra(const std::array<std::array<bool, 3>, 3>& mask);
/// Rows (* * *), (0 * *), (0 * *).
LieSubspace first_candidate();
/// Rows (* * *), (0 * 0), (* * *).
LieSubspace second_candidate();

/// Jordan structures checked against the kernel bound.
struct JordanCase {
  std::string name;
  MatrixC3 p;
};
std::vector<JordanCase> jordan_test_set();

/// {X : X^T H + H conj(X) = 0} as a real subspace; add tr X = 0 for the
/// special algebra.
LieSubspace unitary_algebra(const MatrixQi& h, bool traceless);
MatrixQi diag_form_21();

/// Real dimension of {X in su(H) : X v in C v}. Throws DomainError for v = 0.
std::size_t stabilizer_up_to_scale_dim(const VectorQi& v, const MatrixQi& h);

/// Exact element of U(2,1) for H = diag(1,1,-1) built from phases, a rotation
/// in the first two coordinates and a boost between coordinates 2 and 3.
MatrixC3 random_pseudo_unitary(Rng& rng);

/// Tangent directions of the isotropy family at the identity: q, phi, psi,
/// Im b, Re d, Im d.
std::vector<MatrixC3> isotropy_generators();

struct LineImageResult {
  bool into_line = true;  ///< X w in C w for every generator
  std::optional<std::size_t> witness;  ///< generator index with X w not proportional to w
  bool proportional_to_v = false;      ///< w in C (0,1,0)
};

LineImageResult line_image_test(const LieSubspace& s, const VectorQi& w);

/// v and w proportional over C (both nonzero or both zero).
bool proportional(const VectorQi& v, const VectorQi& w);

}  // namespace homdom
