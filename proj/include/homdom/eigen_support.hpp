#pragma once

#include <Eigen/Core>

#include "homdom/gaussian.hpp"
#include "homdom/rational.hpp"
#include "homdom/scalar.hpp"

// Lets Eigen dense containers hold the exact scalar types. Only the algebraic
// operations (sums, products, transposes, conjugates, traces) are used on
// exact matrices; decompositions live in linalg.hpp.

namespace Eigen {

template <>
struct NumTraits<homdom::Rational> : GenericNumTraits<homdom::Rational> {
  using Real = homdom::Rational;
  using NonInteger = homdom::Rational;
  using Literal = homdom::Rational;
  using Nested = homdom::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 16,
    MulCost = 32
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<homdom::GaussianRational> : GenericNumTraits<homdom::GaussianRational> {
  using Real = homdom::Rational;
  using NonInteger = homdom::GaussianRational;
  using Literal = homdom::GaussianRational;
  using Nested = homdom::GaussianRational;
  enum {
    IsComplex = 1,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 32,
    MulCost = 128
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace homdom {

template <class S, int R = Eigen::Dynamic, int C = Eigen::Dynamic>
using Matrix = Eigen::Matrix<S, R, C>;

template <class S, int R = Eigen::Dynamic>
using Vector = Eigen::Matrix<S, R, 1>;

using MatrixQ = Matrix<Rational>;
using MatrixQi = Matrix<GaussianRational>;
using VectorQ = Vector<Rational>;
using VectorQi = Vector<GaussianRational>;

/// Conjugate transpose that does not depend on Eigen's internal conj dispatch.
template <class Derived>
auto adjoint_of(const Eigen::MatrixBase<Derived>& m) {
  using S = typename Derived::Scalar;
  Matrix<S, Derived::ColsAtCompileTime, Derived::RowsAtCompileTime> out(m.cols(), m.rows());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(j, i) = conj_scalar(m(i, j));
  return out;
}

/// Entrywise complex conjugate.
template <class Derived>
auto conjugate_of(const Eigen::MatrixBase<Derived>& m) {
  using S = typename Derived::Scalar;
  Matrix<S, Derived::RowsAtCompileTime, Derived::ColsAtCompileTime> out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = conj_scalar(m(i, j));
  return out;
}

}  // namespace homdom
