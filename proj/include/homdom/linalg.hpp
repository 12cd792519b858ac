#pragma once

#include <Eigen/Dense>

#include <vector>

#include "homdom/eigen_support.hpp"
#include "homdom/errors.hpp"

namespace homdom {

// Exact Gaussian elimination over Q and Q(i). These never compare against a
// tolerance; a pivot is any exactly nonzero entry.

template <class F>
struct Echelon {
  Matrix<F> reduced;
  std::vector<Eigen::Index> pivot_columns;
};

template <class F>
Echelon<F> reduced_row_echelon(Matrix<F> m) {
  std::vector<Eigen::Index> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Eigen::Index piv = -1;
    for (Eigen::Index r = row; r < m.rows(); ++r) {
      if (!is_zero(m(r, col))) {
        piv = r;
        break;
      }
    }
    if (piv < 0) continue;
    if (piv != row) m.row(piv).swap(m.row(row));
    const F inv = F(1) / m(row, col);
    for (Eigen::Index c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      if (r == row || is_zero(m(r, col))) continue;
      const F factor = m(r, col);
      for (Eigen::Index c = col; c < m.cols(); ++c) m(r, c) -= factor * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

template <class F>
Eigen::Index exact_rank(const Matrix<F>& m) {
  return static_cast<Eigen::Index>(reduced_row_echelon(m).pivot_columns.size());
}

/// Basis of {x : m x = 0}, one vector per column.
template <class F>
Matrix<F> nullspace(const Matrix<F>& m) {
  const auto [reduced, pivots] = reduced_row_echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Eigen::Index> free;
  for (Eigen::Index c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free.push_back(c);
  Matrix<F> basis = Matrix<F>::Constant(m.cols(), static_cast<Eigen::Index>(free.size()), F(0));
  for (std::size_t k = 0; k < free.size(); ++k) {
    basis(free[k], k) = F(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) basis(pivots[r], k) = -reduced(r, free[k]);
  }
  return basis;
}

template <class F>
F exact_determinant(Matrix<F> m) {
  if (m.rows() != m.cols()) throw DomainError("determinant of a non-square matrix");
  F det(1);
  const Eigen::Index n = m.rows();
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index piv = -1;
    for (Eigen::Index r = col; r < n; ++r) {
      if (!is_zero(m(r, col))) {
        piv = r;
        break;
      }
    }
    if (piv < 0) return F(0);
    if (piv != col) {
      m.row(piv).swap(m.row(col));
      det = -det;
    }
    det *= m(col, col);
    const F inv = F(1) / m(col, col);
    for (Eigen::Index r = col + 1; r < n; ++r) {
      if (is_zero(m(r, col))) continue;
      const F factor = m(r, col) * inv;
      for (Eigen::Index c = col; c < n; ++c) m(r, c) -= factor * m(col, c);
    }
  }
  return det;
}

/// Throws DomainError when m is singular.
template <class F>
Matrix<F> exact_inverse(const Matrix<F>& m) {
  if (m.rows() != m.cols()) throw DomainError("inverse of a non-square matrix");
  const Eigen::Index n = m.rows();
  Matrix<F> aug(n, 2 * n);
  aug.leftCols(n) = m;
  aug.rightCols(n) = Matrix<F>::Identity(n, n);
  auto [reduced, pivots] = reduced_row_echelon(aug);
  if (static_cast<Eigen::Index>(pivots.size()) < n || pivots[n - 1] != n - 1)
    throw DomainError("matrix is singular");
  return reduced.rightCols(n);
}

/// Counts of positive, negative and zero eigenvalues.
struct Inertia {
  int positive = 0;
  int negative = 0;
  int zero = 0;
  friend bool operator==(const Inertia&, const Inertia&) = default;
};

/// Exact inertia of a Hermitian matrix over Q(i) by congruence
/// diagonalization (Sylvester's law). Throws DomainError if m is not Hermitian.
Inertia hermitian_inertia(MatrixQi m);

/// Floating eigenvalue signature with a relative zero threshold.
struct SpectralSignature {
  Inertia inertia;
  std::vector<double> eigenvalues;
  double spectral_radius = 0.0;
  /// min |lambda| / max |lambda| (0 when the matrix is numerically zero).
  double margin = 0.0;
};

/// Eigenvalues below `relative_zero * spectral_radius` count as zero; if the
/// spectral radius is below 1e-30 every eigenvalue is zero.
SpectralSignature hermitian_signature(const Eigen::MatrixXcd& m, double relative_zero = 1e-9);
SpectralSignature symmetric_signature(const Eigen::MatrixXd& m, double relative_zero = 1e-9);

}  // namespace homdom
