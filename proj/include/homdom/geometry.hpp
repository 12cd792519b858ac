#pragma once

#include <Eigen/Dense>

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "homdom/linalg.hpp"
#include "homdom/polynomial.hpp"

namespace homdom {

/// Real hypersurface {rho = 0} given by a real-valued defining polynomial.
struct Hypersurface {
  HermitianPolynomial rho;
  std::string name;

  /// Throws DomainError unless rho is real-valued.
  Hypersurface(HermitianPolynomial rho, std::string name);

  std::size_t dimension() const { return rho.nvars(); }
};

/// One side of a hypersurface: points where sign(rho) == side.
struct SidedDomain {
  Hypersurface surface;
  int side = 1;
  std::string name;

  SidedDomain(Hypersurface surface, int side, std::string name);
};

enum class Membership { inside, on_boundary, outside };

std::string to_string(Membership m);

/// Exact classification by the sign of rho.
Membership side_of(const SidedDomain& domain, std::span<const GaussianRational> point);
/// Floating classification; |rho| <= band counts as on_boundary.
Membership side_of(const SidedDomain& domain, std::span<const ComplexFloat> point, double band = 1e-12);

/// Levi form of the domain {rho > 0} at a boundary point, computed from the
/// standard defining function r = -rho (so Re w > <z,z> reports the
/// signature of <z,z>).
struct LeviData {
  std::vector<ComplexFloat> point;
  Eigen::MatrixXcd full_hessian;  ///< d^2 r / dz_j dzbar_k, n x n
  Eigen::MatrixXcd hessian;       ///< restriction to the complex tangent space, (n-1) x (n-1)
  SpectralSignature spectrum;
  Inertia signature() const { return spectrum.inertia; }
};

LeviData levi_form(const Hypersurface& surface, std::span<const ComplexFloat> point);
LeviData levi_form(const FloatPolynomial& rho, std::span<const ComplexFloat> point);

/// Exact counterpart: the restriction uses an exact (non-orthonormal) basis
/// of the complex tangent space; inertia is congruence invariant.
struct ExactLeviData {
  std::vector<GaussianRational> point;
  MatrixQi full_hessian;
  MatrixQi hessian;
  Inertia signature;
};

ExactLeviData levi_form_exact(const Hypersurface& surface, std::span<const GaussianRational> point);

/// Signature of the real Hessian of f (a polynomial in the holomorphic
/// variables only, with real coefficients) at a real point.
template <class S>
SpectralSignature tube_hessian_signature(const Polynomial<S>& f, std::span<const double> x) {
  const std::size_t n = f.nvars();
  if (x.size() != n) throw SpaceError("Hessian point has the wrong dimension");
  std::vector<ComplexFloat> pt(x.begin(), x.end());
  Eigen::MatrixXd h(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const auto dj = partial(f, j);
    for (std::size_t k = j; k < n; ++k) {
      const double v = evaluate<ComplexFloat>(partial(dj, k), std::span<const ComplexFloat>(pt)).real();
      h(j, k) = v;
      h(k, j) = v;
    }
  }
  return symmetric_signature(h);
}

/// rho = Re z_{n+1} - f(Re z_1, ..., Re z_n) for a graph x_{n+1} = f(x).
template <class S>
Polynomial<S> tube_rho(const Polynomial<S>& f) {
  const std::size_t n = f.nvars();
  const std::size_t m = n + 1;
  std::vector<Polynomial<S>> images;
  images.reserve(2 * n);
  for (std::size_t j = 0; j < n; ++j) images.push_back(Polynomial<S>::real_part(m, j));
  for (std::size_t j = 0; j < n; ++j) images.push_back(Polynomial<S>(m));
  for (const auto& [e, c] : f.terms())
    if (bidegree(e).second != 0) throw DomainError("graph function must not involve conjugate variables");
  return Polynomial<S>::real_part(m, n) - substitute(f, images);
}

/// Point on {Re z_n = h(z')} for a hypersurface rho = Re z_n - h(z'): solves
/// Re z_n exactly from the first n-1 coordinates.
std::vector<GaussianRational> boundary_point_over(const Hypersurface& surface,
                                                  std::span<const GaussianRational> prefix,
                                                  const Rational& imag_last);

/// Result of testing whether an affine complex line lies in a domain.
struct LineWitness {
  HermitianPolynomial restricted;  ///< rho(base + t dir) as a polynomial in t, tbar
  std::vector<GaussianRational> samples;
  bool all_samples_inside = true;
  std::optional<GaussianRational> first_failure;
  /// rho is constant along the line.
  std::optional<Rational> constant_value;
  /// rho(base + t dir) = c + sum_k s_k |t|^{2k} with c and every s_k of the
  /// domain's sign (c strictly): an exact all-of-line certificate.
  bool radial_certificate = false;

  bool certified() const { return all_samples_inside && radial_certificate; }
};

/// Always samples t = 0, 1, 10^3, 10^6 in addition to `extra_samples`.
LineWitness contains_complex_line(const SidedDomain& domain, std::span<const GaussianRational> base,
                                  std::span<const GaussianRational> direction,
                                  std::span<const GaussianRational> extra_samples = {});

}  // namespace homdom
