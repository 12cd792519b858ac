#include "homdom/rational.hpp"

#include <cctype>
#include <cmath>
#include <ostream>

#include "homdom/errors.hpp"

namespace homdom {

Rational::Rational(long num, long den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational::Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  std::size_t start = 0;
  while (start < s.size() && std::isspace(static_cast<unsigned char>(s[start]))) ++start;
  s = s.substr(start);
  if (s.empty()) throw ParseError("empty rational literal");
  if (s.front() == '+') s.erase(0, 1);
  const auto slash = s.find('/');
  auto check_digits = [&](const std::string& part, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && !part.empty() && part[0] == '-') i = 1;
    if (i >= part.size()) throw ParseError("malformed rational literal '" + std::string(text) + "'");
    for (; i < part.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(part[i])))
        throw ParseError("malformed rational literal '" + std::string(text) + "'");
    }
  };
  if (slash == std::string::npos) {
    check_digits(s, true);
    return Rational(mpq_class(mpz_class(s)));
  }
  const std::string num = s.substr(0, slash);
  const std::string den = s.substr(slash + 1);
  check_digits(num, true);
  check_digits(den, false);
  mpz_class d(den);
  if (d == 0) throw DomainError("rational with zero denominator");
  return Rational(mpq_class(mpz_class(num), d));
}

std::string Rational::str() const { return v_.get_str(); }

std::string Rational::fraction_str() const {
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational Rational::abs() const {
  mpq_class a;
  mpq_abs(a.get_mpq_t(), v_.get_mpq_t());
  return Rational(a);
}

Rational Rational::pow(int e) const {
  if (e < 0) return Rational(1) / pow(-e);
  mpz_class n;
  mpz_class d;
  mpz_pow_ui(n.get_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(e));
  return Rational(mpq_class(n, d));
}

Rational& Rational::operator+=(const Rational& o) {
  v_ += o.v_;
  return *this;
}
Rational& Rational::operator-=(const Rational& o) {
  v_ -= o.v_;
  return *this;
}
Rational& Rational::operator*=(const Rational& o) {
  v_ *= o.v_;
  return *this;
}
Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  v_ /= o.v_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

namespace {

std::optional<mpz_class> integer_root(const mpz_class& x, unsigned n) {
  mpz_class r;
  if (mpz_root(r.get_mpz_t(), x.get_mpz_t(), n) == 0) return std::nullopt;
  return r;
}

}  // namespace

std::optional<Rational> root_exact(const Rational& r, unsigned n) {
  if (n == 0) throw DomainError("zeroth root");
  if (r.sign() < 0 && n % 2 == 0) throw DomainError("even root of a negative rational");
  if (r.is_zero()) return Rational(0);
  auto num = integer_root(r.numerator(), n);
  auto den = integer_root(r.denominator(), n);
  if (!num || !den) return std::nullopt;
  return Rational(mpq_class(*num, *den));
}

std::optional<Rational> sqrt_exact(const Rational& r) { return root_exact(r, 2); }

double nth_root_float(double r, int n) {
  if (n <= 0) throw DomainError("root index must be positive");
  if (!(r > 0.0)) throw DomainError("nth_root_float requires a positive radicand");
  double x = std::pow(r, 1.0 / n);
  // One Newton step polishes the last bits of std::pow.
  const double xn1 = std::pow(x, n - 1);
  if (xn1 > 0.0) x -= (xn1 * x - r) / (n * xn1);
  return x;
}

}  // namespace homdom
