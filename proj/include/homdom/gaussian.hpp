#pragma once

#include <complex>
#include <concepts>
#include <iosfwd>
#include <string>

#include "homdom/rational.hpp"

namespace homdom {

/// Floating complex scalar used on the evaluation and eigenvalue paths.
using ComplexFloat = std::complex<double>;

/// Exact element of Q(i).
class GaussianRational {
 public:
  GaussianRational() = default;
  template <std::integral I>
  GaussianRational(I v) : re_(v) {}  // NOLINT
  GaussianRational(Rational re) : re_(std::move(re)) {}  // NOLINT
  GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  const Rational& real() const { return re_; }
  const Rational& imag() const { return im_; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }

  GaussianRational conj() const { return {re_, -im_}; }
  /// |w|^2 = re^2 + im^2.
  Rational norm2() const { return re_ * re_ + im_ * im_; }
  /// Throws DomainError on zero.
  GaussianRational inverse() const;
  GaussianRational pow(int e) const;

  /// "a", "bi", "a+bi", "a-bi" with rational parts in lowest terms.
  std::string str() const;

  GaussianRational operator-() const { return {-re_, -im_}; }
  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o) { return *this *= o.inverse(); }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) = default;

 private:
  Rational re_;
  Rational im_;
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& w);

// Free functions found by ADL (Eigen's numext relies on them).
inline GaussianRational conj(const GaussianRational& w) { return w.conj(); }
inline const Rational& real(const GaussianRational& w) { return w.real(); }
inline const Rational& imag(const GaussianRational& w) { return w.imag(); }
inline Rational abs2(const GaussianRational& w) { return w.norm2(); }

/// Lossy, one-way conversion to the floating path.
inline ComplexFloat to_complex(const GaussianRational& w) {
  return {w.real().to_double(), w.imag().to_double()};
}

/// A Gaussian rational of exact unit modulus; stands in for e^{i theta}.
class UnimodularPhase {
 public:
  UnimodularPhase() : value_(1) {}
  /// Throws DomainError unless |value|^2 == 1 exactly.
  explicit UnimodularPhase(GaussianRational value);

  /// ((1 - t^2) + 2ti) / (1 + t^2), the rational point of the unit circle
  /// with half-angle tangent t.
  static UnimodularPhase from_parameter(const Rational& t);

  const GaussianRational& value() const { return value_; }
  UnimodularPhase conj() const { return UnimodularPhase(value_.conj(), Trusted{}); }

  friend UnimodularPhase operator*(const UnimodularPhase& a, const UnimodularPhase& b) {
    return UnimodularPhase(a.value_ * b.value_, Trusted{});
  }
  friend bool operator==(const UnimodularPhase& a, const UnimodularPhase& b) = default;

 private:
  struct Trusted {};
  UnimodularPhase(GaussianRational v, Trusted) : value_(std::move(v)) {}
  GaussianRational value_;
};

inline UnimodularPhase phase_from_parameter(const Rational& t) {
  return UnimodularPhase::from_parameter(t);
}

}  // namespace homdom
