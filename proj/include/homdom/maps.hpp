#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "homdom/eigen_support.hpp"
#include "homdom/polynomial.hpp"

namespace homdom {

/// Holomorphic polynomial map C^{n_in} -> C^{n_out}.
template <class S>
class PolyMap {
 public:
  PolyMap() = default;

  /// Throws SpaceError if a component has the wrong space or involves a
  /// conjugate variable.
  PolyMap(std::size_t n_in, std::vector<Polynomial<S>> components) : n_in_(n_in), components_(std::move(components)) {
    for (const auto& c : components_) {
      if (c.nvars() != n_in_) throw SpaceError("map component lives in the wrong space");
      if (!is_holomorphic(c)) throw SpaceError("map component involves a conjugate variable");
    }
  }

  static PolyMap identity(std::size_t n) {
    std::vector<Polynomial<S>> comps;
    for (std::size_t i = 0; i < n; ++i) comps.push_back(Polynomial<S>::z(n, i));
    return PolyMap(n, std::move(comps));
  }

  std::size_t n_in() const { return n_in_; }
  std::size_t n_out() const { return components_.size(); }
  const std::vector<Polynomial<S>>& components() const { return components_; }
  const Polynomial<S>& operator[](std::size_t i) const { return components_.at(i); }

  /// Images z_i -> f_i, zbar_i -> conj(f_i), ready for substitute().
  std::vector<Polynomial<S>> pullback_images() const {
    std::vector<Polynomial<S>> images(components_);
    for (const auto& c : components_) images.push_back(conjugate(c));
    return images;
  }

  template <class T>
  std::vector<T> apply(std::span<const T> point) const {
    std::vector<T> out;
    out.reserve(components_.size());
    for (const auto& c : components_) out.push_back(evaluate<T>(c, point));
    return out;
  }

  template <class T>
  std::vector<T> apply(const std::vector<T>& point) const {
    return apply<T>(std::span<const T>(point));
  }

  /// Jacobian at the origin: entry (i, j) is the coefficient of z_j in f_i.
  Matrix<S> linear_part() const {
    Matrix<S> m(static_cast<Eigen::Index>(n_out()), static_cast<Eigen::Index>(n_in_));
    for (std::size_t i = 0; i < n_out(); ++i) {
      for (std::size_t j = 0; j < n_in_; ++j) {
        Exponents e(2 * n_in_, 0);
        e[j] = 1;
        m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = components_[i].coefficient(e);
      }
    }
    return m;
  }

  friend bool operator==(const PolyMap& a, const PolyMap& b) {
    return a.n_in_ == b.n_in_ && a.components_ == b.components_;
  }

 private:
  std::size_t n_in_ = 0;
  std::vector<Polynomial<S>> components_;
};

using HoloPolyMap = PolyMap<GaussianRational>;
using FloatPolyMap = PolyMap<ComplexFloat>;

/// f o g.
template <class S>
PolyMap<S> compose(const PolyMap<S>& f, const PolyMap<S>& g) {
  if (g.n_out() != f.n_in()) throw SpaceError("cannot compose: output of g does not match input of f");
  const auto images = g.pullback_images();
  std::vector<Polynomial<S>> comps;
  comps.reserve(f.n_out());
  for (const auto& c : f.components()) comps.push_back(substitute(c, images));
  return PolyMap<S>(g.n_in(), std::move(comps));
}

/// rho o f, with zbar_i -> conj(f_i).
template <class S>
Polynomial<S> pullback(const Polynomial<S>& rho, const PolyMap<S>& f) {
  if (rho.nvars() != f.n_out()) throw SpaceError("cannot pull back: defining function and map disagree on dimension");
  return substitute(rho, f.pullback_images());
}

template <class To, class From>
PolyMap<To> convert(const PolyMap<From>& f) {
  std::vector<Polynomial<To>> comps;
  for (const auto& c : f.components()) comps.push_back(convert<To>(c));
  return PolyMap<To>(f.n_in(), std::move(comps));
}

/// Inverse of a triangular polynomial map. `order` lists the variables in
/// solving order; component order[k] must be c * z_{order[k]} + g with c a
/// nonzero constant and g depending only on variables solved earlier.
/// Throws DomainError otherwise.
HoloPolyMap invert_triangular(const HoloPolyMap& f, std::span<const std::size_t> order);

/// Real affine map x -> A x + t.
template <class R>
struct AffineMap {
  Matrix<R> matrix;
  Vector<R> translation;

  static AffineMap identity(Eigen::Index n) {
    return {Matrix<R>::Identity(n, n), Vector<R>::Constant(n, R(0))};
  }

  Eigen::Index dimension() const { return matrix.rows(); }

  Vector<R> apply(const Vector<R>& x) const {
    Vector<R> y = translation;
    for (Eigen::Index i = 0; i < matrix.rows(); ++i)
      for (Eigen::Index j = 0; j < matrix.cols(); ++j) y(i) += matrix(i, j) * x(j);
    return y;
  }

  friend bool operator==(const AffineMap& a, const AffineMap& b) {
    return a.matrix == b.matrix && a.translation == b.translation;
  }
};

using AffineMapR = AffineMap<Rational>;
using AffineMapF = AffineMap<double>;

/// f o g for affine maps.
template <class R>
AffineMap<R> compose(const AffineMap<R>& f, const AffineMap<R>& g) {
  const Eigen::Index n = f.dimension();
  AffineMap<R> out{Matrix<R>::Constant(n, n, R(0)), f.translation};
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      for (Eigen::Index k = 0; k < n; ++k) out.matrix(i, j) += f.matrix(i, k) * g.matrix(k, j);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index k = 0; k < n; ++k) out.translation(i) += f.matrix(i, k) * g.translation(k);
  return out;
}

Rational determinant(const AffineMapR& f);

/// The same matrix and translation acting on complex coordinates.
HoloPolyMap lift_affine(const AffineMapR& f);

/// The identity rho_target o F = factor * rho_source, checked exactly
/// (exact scalars) or to a coefficient tolerance (floating scalars).
template <class S>
struct Certificate {
  PolyMap<S> map;
  Polynomial<S> rho;         ///< source defining function
  Polynomial<S> target_rho;  ///< equals rho for invariance certificates
  S factor{};
  bool exact = false;  ///< residual is identically zero
  bool holds = false;  ///< exact, or within tolerance on the floating path
  Polynomial<S> residual;
  double residual_norm = 0.0;
};

template <class S>
Certificate<S> equivalence_certificate(const Polynomial<S>& source_rho, const Polynomial<S>& target_rho,
                                       const PolyMap<S>& f, double tolerance = 1e-9) {
  if (source_rho.is_zero()) throw DomainError("certificate needs a nonzero defining function");
  if (f.n_in() != source_rho.nvars()) throw SpaceError("map input does not match the source defining function");
  Certificate<S> cert;
  cert.map = f;
  cert.rho = source_rho;
  cert.target_rho = target_rho;
  const Polynomial<S> pulled = pullback(target_rho, f);
  const auto& [first_mono, first_coef] = *source_rho.terms().begin();
  auto it = pulled.terms().find(first_mono);
  if (it == pulled.terms().end()) {
    cert.factor = S(0);
    cert.residual = pulled;
  } else {
    cert.factor = it->second / first_coef;
    cert.residual = pulled - cert.factor * source_rho;
  }
  cert.exact = cert.residual.is_zero() && !is_zero(cert.factor);
  cert.residual_norm = max_abs_coefficient(cert.residual);
  if constexpr (ScalarTraits<S>::exact) {
    cert.holds = cert.exact;
  } else {
    cert.holds = !is_zero(cert.factor) && cert.residual_norm <= tolerance;
  }
  return cert;
}

/// rho o F = c rho.
template <class S>
Certificate<S> invariance_certificate(const Polynomial<S>& rho, const PolyMap<S>& f, double tolerance = 1e-9) {
  return equivalence_certificate(rho, rho, f, tolerance);
}

/// Positive real number prod_k base_k^{exponent_k} with rational bases and
/// exponents, e.g. sqrt(2) or (3/4)^{1/4}.
class RadicalScalar {
 public:
  RadicalScalar() = default;
  /// Throws DomainError unless base > 0.
  static RadicalScalar power(const Rational& base, const Rational& exponent);
  static RadicalScalar rational(const Rational& value) { return power(value, Rational(1)); }

  RadicalScalar pow(const Rational& e) const;
  friend RadicalScalar operator*(const RadicalScalar& a, const RadicalScalar& b);

  double to_double() const;
  /// Exact value when it is rational.
  std::optional<Rational> to_rational() const;
  std::string str() const;

  friend bool operator==(const RadicalScalar&, const RadicalScalar&) = default;

 private:
  std::map<Rational, Rational> factors_;  // base -> exponent, base != 1, exponent != 0
};

/// A map of the form diag(scale) o inner with inner rational. Certificates
/// for it run on the rescaled target defining function rho o diag(scale),
/// which is rational whenever the radicals cancel.
struct RescaledMap {
  HoloPolyMap inner;
  std::vector<RadicalScalar> scale;

  FloatPolyMap to_float() const;
};

/// rho o diag(scale). Throws DomainError if a coefficient would be irrational.
HermitianPolynomial rescale_variables(const HermitianPolynomial& rho, std::span<const RadicalScalar> scale);

struct RescaledCertificate {
  Certificate<GaussianRational> exact;  ///< rho_target o diag(scale) o inner vs rho_source
  Certificate<ComplexFloat> floating;   ///< the full map in floating point
  bool holds() const { return exact.exact && floating.holds; }
};

RescaledCertificate rescaled_certificate(const HermitianPolynomial& source_rho, const HermitianPolynomial& target_rho,
                                         const RescaledMap& map, double tolerance = 1e-9);

}  // namespace homdom
