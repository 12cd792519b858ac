#include "homdom/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace homdom {
namespace {

// Applies the congruence m <- T^* m T with T = I + c e_j e_i^T (adds c * column j
// to column i and conj(c) * row j to row i).
void add_congruence(MatrixQi& m, Eigen::Index i, Eigen::Index j, const GaussianRational& c) {
  for (Eigen::Index r = 0; r < m.rows(); ++r) m(r, i) += c * m(r, j);
  const GaussianRational cc = c.conj();
  for (Eigen::Index k = 0; k < m.cols(); ++k) m(i, k) += cc * m(j, k);
}

SpectralSignature classify(std::vector<double> eigenvalues, double relative_zero) {
  SpectralSignature sig;
  double radius = 0.0;
  for (double v : eigenvalues) radius = std::max(radius, std::abs(v));
  sig.spectral_radius = radius;
  double min_abs = radius;
  for (double v : eigenvalues) {
    const double a = std::abs(v);
    min_abs = std::min(min_abs, a);
    if (radius < 1e-30 || a <= relative_zero * radius)
      ++sig.inertia.zero;
    else if (v > 0)
      ++sig.inertia.positive;
    else
      ++sig.inertia.negative;
  }
  sig.margin = radius < 1e-30 ? 0.0 : min_abs / radius;
  sig.eigenvalues = std::move(eigenvalues);
  return sig;
}

}  // namespace

Inertia hermitian_inertia(MatrixQi m) {
  if (m.rows() != m.cols()) throw DomainError("inertia of a non-square matrix");
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      if (m(r, c) != m(c, r).conj()) throw DomainError("matrix is not Hermitian");

  Inertia out;
  const Eigen::Index n = m.rows();
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index piv = -1;
    for (Eigen::Index r = k; r < n; ++r) {
      if (!m(r, r).is_zero()) {
        piv = r;
        break;
      }
    }
    if (piv < 0) {
      // Zero diagonal: manufacture a nonzero one from an off-diagonal entry.
      Eigen::Index a = -1;
      Eigen::Index b = -1;
      for (Eigen::Index r = k; r < n && a < 0; ++r)
        for (Eigen::Index c = r + 1; c < n; ++c)
          if (!m(r, c).is_zero()) {
            a = r;
            b = c;
            break;
          }
      if (a < 0) {
        out.zero += static_cast<int>(n - k);
        break;
      }
      // (e_a + c e_b)^* m (e_a + c e_b) = 2 Re(c m(a,b)) when the diagonal vanishes.
      const GaussianRational c = m(a, b).conj();
      add_congruence(m, a, b, c);
      piv = a;
    }
    if (piv != k) {
      m.row(piv).swap(m.row(k));
      m.col(piv).swap(m.col(k));
    }
    const GaussianRational d = m(k, k);
    if (d.real().sign() > 0)
      ++out.positive;
    else
      ++out.negative;
    for (Eigen::Index r = k + 1; r < n; ++r) {
      if (m(r, k).is_zero()) continue;
      const GaussianRational f = -(m(k, r) / d);
      add_congruence(m, r, k, f);
    }
  }
  return out;
}

SpectralSignature hermitian_signature(const Eigen::MatrixXcd& m, double relative_zero) {
  if (m.rows() == 0) return {};
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();
  return classify(std::vector<double>(ev.data(), ev.data() + ev.size()), relative_zero);
}

SpectralSignature symmetric_signature(const Eigen::MatrixXd& m, double relative_zero) {
  if (m.rows() == 0) return {};
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();
  return classify(std::vector<double>(ev.data(), ev.data() + ev.size()), relative_zero);
}

}  // namespace homdom
