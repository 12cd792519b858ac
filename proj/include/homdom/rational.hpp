#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace homdom {

/// Exact rational number in canonical form (positive denominator, coprime parts).
class Rational {
 public:
  Rational() = default;

  template <std::integral I>
  Rational(I v) : v_(static_cast<long>(v)) {}  // NOLINT: implicit by design of a numeric type

  Rational(long num, long den);
  explicit Rational(mpq_class v);

  /// Parses "n", "-n", "n/d".
  static Rational parse(std::string_view text);

  const mpq_class& value() const { return v_; }
  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return v_.get_den() == 1; }

  double to_double() const { return v_.get_d(); }
  /// "n" for integers, "n/d" otherwise.
  std::string str() const;
  /// Always "n/d", used for bit-exact serialization.
  std::string fraction_str() const;

  Rational abs() const;
  Rational pow(int e) const;

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Exact square root when numerator and denominator are perfect squares.
/// Throws DomainError for negative input.
std::optional<Rational> sqrt_exact(const Rational& r);

/// Exact n-th root (n >= 1) when it exists in the rationals. Negative input is
/// accepted only for odd n.
std::optional<Rational> root_exact(const Rational& r, unsigned n);

/// Real positive n-th root; |result^n - r| <= 1e-12 max(1, |r|).
double nth_root_float(double r, int n);

}  // namespace homdom
