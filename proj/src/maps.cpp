#include "homdom/maps.hpp"

#include <cmath>
#include <set>
#include <sstream>

#include "homdom/linalg.hpp"

namespace homdom {

HoloPolyMap invert_triangular(const HoloPolyMap& f, std::span<const std::size_t> order) {
  const std::size_t n = f.n_in();
  if (f.n_out() != n || order.size() != n) throw DomainError("triangular inversion needs a square map and a full order");
  std::vector<HermitianPolynomial> images(2 * n, HermitianPolynomial(n));
  std::vector<HermitianPolynomial> inverse(n, HermitianPolynomial(n));
  std::set<std::size_t> solved;
  for (std::size_t v : order) {
    if (v >= n || solved.count(v)) throw DomainError("triangular order is not a permutation");
    const HermitianPolynomial& fv = f[v];
    Exponents lin(2 * n, 0);
    lin[v] = 1;
    const GaussianRational c = fv.coefficient(lin);
    if (c.is_zero()) throw DomainError("component " + std::to_string(v + 1) + " has no linear term in its own variable");
    HermitianPolynomial g = fv - HermitianPolynomial::monomial(n, lin, c);
    for (const auto& [e, coef] : g.terms())
      for (std::size_t k = 0; k < n; ++k)
        if (e[k] > 0 && !solved.count(k))
          throw DomainError("map is not triangular in the given order");
    const HermitianPolynomial gv = substitute(g, images);
    inverse[v] = (HermitianPolynomial::z(n, v) - gv) * c.inverse();
    images[v] = inverse[v];
    solved.insert(v);
  }
  return HoloPolyMap(n, std::move(inverse));
}

Rational determinant(const AffineMapR& f) { return exact_determinant(f.matrix); }

HoloPolyMap lift_affine(const AffineMapR& f) {
  const std::size_t n = static_cast<std::size_t>(f.dimension());
  std::vector<HermitianPolynomial> comps;
  for (std::size_t i = 0; i < n; ++i) {
    const auto row = static_cast<Eigen::Index>(i);
    HermitianPolynomial c = HermitianPolynomial::constant(n, GaussianRational(f.translation(row)));
    for (std::size_t j = 0; j < n; ++j)
      c += HermitianPolynomial::z(n, j) * GaussianRational(f.matrix(row, static_cast<Eigen::Index>(j)));
    comps.push_back(std::move(c));
  }
  return HoloPolyMap(n, std::move(comps));
}

namespace {

// Splits a positive integer into trial-division primes; a cofactor left after
// the search bound is kept as a single atom.
void factor_into(const mpz_class& value, const Rational& exponent, std::map<Rational, Rational>& out) {
  mpz_class v = value;
  auto add = [&](const mpz_class& atom, unsigned long count) {
    Rational key{mpq_class(atom)};
    Rational& slot = out[key];
    slot += exponent * Rational(static_cast<long>(count));
    if (slot.is_zero()) out.erase(key);
  };
  for (unsigned long p = 2; p < 100000 && v > 1; ++p) {
    if (mpz_class(p) * p > v) break;
    unsigned long count = 0;
    while (mpz_divisible_ui_p(v.get_mpz_t(), p)) {
      mpz_divexact_ui(v.get_mpz_t(), v.get_mpz_t(), p);
      ++count;
    }
    if (count) add(mpz_class(p), count);
  }
  if (v > 1) add(v, 1);
}

}  // namespace

RadicalScalar RadicalScalar::power(const Rational& base, const Rational& exponent) {
  if (base.sign() <= 0) throw DomainError("radical base must be positive");
  RadicalScalar r;
  factor_into(base.numerator(), exponent, r.factors_);
  factor_into(base.denominator(), -exponent, r.factors_);
  return r;
}

RadicalScalar RadicalScalar::pow(const Rational& e) const {
  RadicalScalar r;
  if (e.is_zero()) return r;
  for (const auto& [b, x] : factors_) r.factors_[b] = x * e;
  return r;
}

RadicalScalar operator*(const RadicalScalar& a, const RadicalScalar& b) {
  RadicalScalar r = a;
  for (const auto& [base, x] : b.factors_) {
    Rational& slot = r.factors_[base];
    slot += x;
    if (slot.is_zero()) r.factors_.erase(base);
  }
  return r;
}

double RadicalScalar::to_double() const {
  double v = 1.0;
  for (const auto& [b, x] : factors_) v *= std::pow(b.to_double(), x.to_double());
  return v;
}

std::optional<Rational> RadicalScalar::to_rational() const {
  Rational v(1);
  for (const auto& [b, x] : factors_) {
    if (!x.is_integer()) return std::nullopt;
    v *= b.pow(static_cast<int>(x.numerator().get_si()));
  }
  return v;
}

std::string RadicalScalar::str() const {
  if (factors_.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [b, x] : factors_) {
    if (!first) os << "*";
    first = false;
    os << b.str();
    if (!(x == Rational(1))) os << "^(" << x.str() << ")";
  }
  return os.str();
}

FloatPolyMap RescaledMap::to_float() const {
  if (scale.size() != inner.n_out()) throw SpaceError("scale vector does not match map output");
  std::vector<FloatPolynomial> comps;
  for (std::size_t i = 0; i < inner.n_out(); ++i)
    comps.push_back(convert<ComplexFloat>(inner[i]) * ComplexFloat(scale[i].to_double(), 0.0));
  return FloatPolyMap(inner.n_in(), std::move(comps));
}

HermitianPolynomial rescale_variables(const HermitianPolynomial& rho, std::span<const RadicalScalar> scale) {
  const std::size_t n = rho.nvars();
  if (scale.size() != n) throw SpaceError("scale vector does not match the variable count");
  HermitianPolynomial out(n);
  for (const auto& [e, c] : rho.terms()) {
    RadicalScalar f;
    for (std::size_t i = 0; i < n; ++i) {
      const int k = e[i] + e[i + n];
      if (k) f = f * scale[i].pow(Rational(k));
    }
    auto q = f.to_rational();
    if (!q) throw DomainError("rescaled coefficient is irrational: " + f.str());
    out.add_term(e, c * GaussianRational(*q));
  }
  return out;
}

RescaledCertificate rescaled_certificate(const HermitianPolynomial& source_rho, const HermitianPolynomial& target_rho,
                                         const RescaledMap& map, double tolerance) {
  RescaledCertificate out;
  out.exact = equivalence_certificate(source_rho, rescale_variables(target_rho, map.scale), map.inner);
  out.floating = equivalence_certificate(convert<ComplexFloat>(source_rho), convert<ComplexFloat>(target_rho),
                                         map.to_float(), tolerance);
  return out;
}

}  // namespace homdom
