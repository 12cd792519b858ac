#include "homdom/geometry.hpp"

#include <cmath>

namespace homdom {

Hypersurface::Hypersurface(HermitianPolynomial r, std::string n) : rho(std::move(r)), name(std::move(n)) {
  if (!is_real_valued(rho)) throw DomainError("defining function of '" + name + "' is not real-valued");
}

SidedDomain::SidedDomain(Hypersurface s, int sd, std::string n)
    : surface(std::move(s)), side(sd), name(std::move(n)) {
  if (side != 1 && side != -1) throw DomainError("domain side must be +1 or -1");
}

std::string to_string(Membership m) {
  switch (m) {
    case Membership::inside:
      return "inside";
    case Membership::on_boundary:
      return "on_boundary";
    case Membership::outside:
      return "outside";
  }
  return "?";
}

Membership side_of(const SidedDomain& domain, std::span<const GaussianRational> point) {
  const GaussianRational v = evaluate<GaussianRational>(domain.surface.rho, point);
  const int s = v.real().sign();
  if (s == 0) return Membership::on_boundary;
  return s == domain.side ? Membership::inside : Membership::outside;
}

Membership side_of(const SidedDomain& domain, std::span<const ComplexFloat> point, double band) {
  const double v = evaluate<ComplexFloat>(domain.surface.rho, point).real();
  if (std::abs(v) <= band) return Membership::on_boundary;
  return (v > 0) == (domain.side > 0) ? Membership::inside : Membership::outside;
}

namespace {

// Orthonormal basis of {v : sum_j g_j v_j = 0} by modified Gram-Schmidt on
// the standard basis, after projecting off the unit normal conj(g)/|g|.
Eigen::MatrixXcd tangent_basis(const Eigen::VectorXcd& gradient) {
  const Eigen::Index n = gradient.size();
  const Eigen::VectorXcd normal = gradient.conjugate().normalized();
  std::vector<Eigen::VectorXcd> basis;
  for (Eigen::Index k = 0; k < n && static_cast<Eigen::Index>(basis.size()) < n - 1; ++k) {
    Eigen::VectorXcd v = Eigen::VectorXcd::Unit(n, k);
    v -= normal.dot(v) * normal;
    for (const auto& b : basis) v -= b.dot(v) * b;
    const double norm = v.norm();
    if (norm < 1e-6) continue;
    basis.push_back(v / norm);
  }
  Eigen::MatrixXcd e(n, static_cast<Eigen::Index>(basis.size()));
  for (std::size_t k = 0; k < basis.size(); ++k) e.col(static_cast<Eigen::Index>(k)) = basis[k];
  return e;
}

}  // namespace

LeviData levi_form(const FloatPolynomial& rho, std::span<const ComplexFloat> point) {
  const std::size_t n = rho.nvars();
  if (point.size() != n) throw SpaceError("Levi form point has the wrong dimension");
  const FloatPolynomial r = -rho;
  Eigen::VectorXcd grad(n);
  for (std::size_t j = 0; j < n; ++j) grad(j) = evaluate<ComplexFloat>(partial(r, j), point);
  if (grad.cwiseAbs().maxCoeff() < 1e-12)
    throw NotAHypersurfacePoint("gradient of the defining function vanishes at the requested point");

  LeviData out;
  out.point.assign(point.begin(), point.end());
  out.full_hessian.resize(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const auto dj = partial(r, j);
    for (std::size_t k = 0; k < n; ++k) out.full_hessian(j, k) = evaluate<ComplexFloat>(partial(dj, k + n), point);
  }
  const Eigen::MatrixXcd e = tangent_basis(grad);
  out.hessian = e.transpose() * out.full_hessian * e.conjugate();
  out.spectrum = hermitian_signature(out.hessian);
  return out;
}

LeviData levi_form(const Hypersurface& surface, std::span<const ComplexFloat> point) {
  return levi_form(convert<ComplexFloat>(surface.rho), point);
}

ExactLeviData levi_form_exact(const Hypersurface& surface, std::span<const GaussianRational> point) {
  const std::size_t n = surface.dimension();
  if (point.size() != n) throw SpaceError("Levi form point has the wrong dimension");
  const HermitianPolynomial r = -surface.rho;
  MatrixQi grad(1, n);
  bool nonzero = false;
  for (std::size_t j = 0; j < n; ++j) {
    grad(0, j) = evaluate<GaussianRational>(partial(r, j), point);
    nonzero = nonzero || !grad(0, j).is_zero();
  }
  if (!nonzero) throw NotAHypersurfacePoint("gradient of the defining function vanishes at the requested point");

  ExactLeviData out;
  out.point.assign(point.begin(), point.end());
  out.full_hessian.resize(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const auto dj = partial(r, j);
    for (std::size_t k = 0; k < n; ++k)
      out.full_hessian(j, k) = evaluate<GaussianRational>(partial(dj, k + n), point);
  }
  const MatrixQi e = nullspace(grad);
  const MatrixQi et = e.transpose();
  const MatrixQi ebar = conjugate_of(e);
  out.hessian = et * out.full_hessian * ebar;
  out.signature = hermitian_inertia(out.hessian);
  return out;
}

std::vector<GaussianRational> boundary_point_over(const Hypersurface& surface,
                                                  std::span<const GaussianRational> prefix,
                                                  const Rational& imag_last) {
  const std::size_t n = surface.dimension();
  if (prefix.size() + 1 != n) throw SpaceError("boundary sampling needs all but the last coordinate");
  const HermitianPolynomial h = HermitianPolynomial::real_part(n, n - 1) - surface.rho;
  for (const auto& [e, c] : h.terms())
    if (e[n - 1] != 0 || e[2 * n - 1] != 0)
      throw DomainError("surface is not a graph over its last real coordinate");
  std::vector<GaussianRational> pt(prefix.begin(), prefix.end());
  pt.emplace_back(0);
  const GaussianRational hv = evaluate<GaussianRational>(h, std::span<const GaussianRational>(pt));
  pt.back() = GaussianRational(hv.real(), imag_last);
  return pt;
}

LineWitness contains_complex_line(const SidedDomain& domain, std::span<const GaussianRational> base,
                                  std::span<const GaussianRational> direction,
                                  std::span<const GaussianRational> extra_samples) {
  const std::size_t n = domain.surface.dimension();
  if (base.size() != n || direction.size() != n) throw SpaceError("line data has the wrong dimension");
  bool nonzero = false;
  for (const auto& d : direction) nonzero = nonzero || !d.is_zero();
  if (!nonzero) throw DomainError("line direction must be nonzero");

  std::vector<HermitianPolynomial> images;
  const auto t = HermitianPolynomial::z(1, 0);
  const auto tb = HermitianPolynomial::zbar(1, 0);
  for (std::size_t j = 0; j < n; ++j) images.push_back(HermitianPolynomial::constant(1, base[j]) + direction[j] * t);
  for (std::size_t j = 0; j < n; ++j)
    images.push_back(HermitianPolynomial::constant(1, base[j].conj()) + direction[j].conj() * tb);

  LineWitness w;
  w.restricted = substitute(domain.surface.rho, images);

  w.samples = {GaussianRational(0), GaussianRational(1), GaussianRational(1000), GaussianRational(1000000)};
  w.samples.insert(w.samples.end(), extra_samples.begin(), extra_samples.end());
  for (const auto& s : w.samples) {
    const std::vector<GaussianRational> pt{s};
    const GaussianRational v = evaluate<GaussianRational>(w.restricted, pt);
    if (v.real().sign() != domain.side) {
      w.all_samples_inside = false;
      if (!w.first_failure) w.first_failure = s;
    }
  }

  const auto deg = w.restricted.degree();
  if (!deg || *deg == 0) w.constant_value = w.restricted.constant_term().real();

  bool radial = domain.side * w.restricted.constant_term().real().sign() > 0;
  for (const auto& [e, c] : w.restricted.terms()) {
    if (e[0] != e[1] || !c.is_real() || c.real().sign() != domain.side) {
      radial = false;
      break;
    }
  }
  w.radial_certificate = radial;
  return w;
}

}  // namespace homdom
