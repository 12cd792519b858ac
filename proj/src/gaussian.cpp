#include "homdom/gaussian.hpp"

#include <ostream>

#include "homdom/errors.hpp"

namespace homdom {

GaussianRational GaussianRational::inverse() const {
  if (is_zero()) throw DomainError("division by zero");
  const Rational n = norm2();
  return {re_ / n, -im_ / n};
}

GaussianRational GaussianRational::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  GaussianRational result(1);
  GaussianRational base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

std::string GaussianRational::str() const {
  if (im_.is_zero()) return re_.str();
  std::string imag_part = (im_ == Rational(1)) ? "" : (im_ == Rational(-1) ? "-" : im_.str());
  if (re_.is_zero()) return imag_part + "i";
  if (im_.sign() > 0) return re_.str() + "+" + imag_part + "i";
  return re_.str() + imag_part + "i";
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& w) { return os << w.str(); }

UnimodularPhase::UnimodularPhase(GaussianRational value) : value_(std::move(value)) {
  if (value_.norm2() != Rational(1)) throw DomainError("phase value " + value_.str() + " is not unimodular");
}

UnimodularPhase UnimodularPhase::from_parameter(const Rational& t) {
  const Rational denom = Rational(1) + t * t;
  return UnimodularPhase(GaussianRational((Rational(1) - t * t) / denom, Rational(2) * t / denom), Trusted{});
}

}  // namespace homdom
