#pragma once

#include <cmath>
#include <complex>
#include <sstream>
#include <string>
#include <type_traits>

#include "homdom/gaussian.hpp"
#include "homdom/rational.hpp"

namespace homdom {

/// Uniform interface over the exact and floating scalar towers.
template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  using Real = Rational;
  static constexpr bool exact = true;
  static constexpr bool complex = false;
  static bool is_zero(const Rational& s) { return s.is_zero(); }
  static Rational conj(const Rational& s) { return s; }
  static double to_double(const Rational& s) { return s.to_double(); }
  static ComplexFloat to_complex(const Rational& s) { return {s.to_double(), 0.0}; }
  static std::string str(const Rational& s) { return s.str(); }
};

template <>
struct ScalarTraits<GaussianRational> {
  using Real = Rational;
  static constexpr bool exact = true;
  static constexpr bool complex = true;
  static bool is_zero(const GaussianRational& s) { return s.is_zero(); }
  static GaussianRational conj(const GaussianRational& s) { return s.conj(); }
  static Rational real(const GaussianRational& s) { return s.real(); }
  static Rational imag(const GaussianRational& s) { return s.imag(); }
  static ComplexFloat to_complex(const GaussianRational& s) { return homdom::to_complex(s); }
  static GaussianRational from_real(const Rational& r) { return GaussianRational(r); }
  static std::string str(const GaussianRational& s) { return s.str(); }
};

template <>
struct ScalarTraits<double> {
  using Real = double;
  static constexpr bool exact = false;
  static constexpr bool complex = false;
  static bool is_zero(double s) { return s == 0.0; }
  static double conj(double s) { return s; }
  static double to_double(double s) { return s; }
  static ComplexFloat to_complex(double s) { return {s, 0.0}; }
  static std::string str(double s) {
    std::ostringstream os;
    os.precision(17);
    os << s;
    return os.str();
  }
};

template <>
struct ScalarTraits<ComplexFloat> {
  using Real = double;
  static constexpr bool exact = false;
  static constexpr bool complex = true;
  static bool is_zero(const ComplexFloat& s) { return s == ComplexFloat(0.0, 0.0); }
  static ComplexFloat conj(const ComplexFloat& s) { return std::conj(s); }
  static double real(const ComplexFloat& s) { return s.real(); }
  static double imag(const ComplexFloat& s) { return s.imag(); }
  static ComplexFloat to_complex(const ComplexFloat& s) { return s; }
  static ComplexFloat from_real(double r) { return {r, 0.0}; }
  static std::string str(const ComplexFloat& s) {
    std::ostringstream os;
    os.precision(17);
    os << s.real();
    if (s.imag() != 0.0) os << (s.imag() < 0 ? "" : "+") << s.imag() << "i";
    return os.str();
  }
};

template <class S>
bool is_zero(const S& s) {
  return ScalarTraits<S>::is_zero(s);
}

template <class S>
S conj_scalar(const S& s) {
  return ScalarTraits<S>::conj(s);
}

/// Converts between scalar types along the allowed directions:
/// identity, Rational -> GaussianRational, exact -> floating.
template <class To, class From>
To scalar_cast(const From& v) {
  if constexpr (std::is_same_v<To, From>) {
    return v;
  } else if constexpr (std::is_same_v<To, GaussianRational> && std::is_same_v<From, Rational>) {
    return GaussianRational(v);
  } else if constexpr (std::is_same_v<To, ComplexFloat>) {
    return ScalarTraits<From>::to_complex(v);
  } else if constexpr (std::is_same_v<To, double>) {
    return ScalarTraits<From>::to_double(v);
  } else {
    static_assert(sizeof(To) == 0, "unsupported scalar conversion");
  }
}

/// Floating magnitude, used for residual norms.
template <class S>
double magnitude(const S& s) {
  return std::abs(ScalarTraits<S>::to_complex(s));
}

}  // namespace homdom
