#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "homdom/errors.hpp"
#include "homdom/scalar.hpp"

namespace homdom {

/// Holomorphic variables z_1..z_n followed by their formal conjugates.
/// Index i < n is z_{i+1}; index i + n is its conjugate.
struct VariableSpace {
  std::size_t n = 0;

  std::size_t size() const { return 2 * n; }
  bool is_conjugate(std::size_t index) const { return index >= n; }
  std::size_t partner(std::size_t index) const { return index < n ? index + n : index - n; }
  std::string name(std::size_t index) const {
    return index < n ? "z" + std::to_string(index + 1) : "zb" + std::to_string(index - n + 1);
  }
  friend bool operator==(const VariableSpace&, const VariableSpace&) = default;
};

/// Exponent vector of length 2n; std::map orders these lexicographically.
using Exponents = std::vector<int>;

/// Sparse polynomial in z, zbar with coefficients in S.
template <class S>
class Polynomial {
 public:
  using Scalar = S;
  using Terms = std::map<Exponents, S>;

  Polynomial() = default;
  explicit Polynomial(std::size_t n) : space_{n} {}

  static Polynomial constant(std::size_t n, const S& c) {
    Polynomial p(n);
    p.add_term(Exponents(2 * n, 0), c);
    return p;
  }

  static Polynomial monomial(std::size_t n, Exponents e, const S& c) {
    if (e.size() != 2 * n) throw SpaceError("exponent vector length does not match variable space");
    Polynomial p(n);
    p.add_term(e, c);
    return p;
  }

  static Polynomial variable(std::size_t n, std::size_t index) {
    if (index >= 2 * n) throw SpaceError("variable index out of range");
    Exponents e(2 * n, 0);
    e[index] = 1;
    return monomial(n, std::move(e), S(1));
  }

  /// z_{i+1} (0-based i).
  static Polynomial z(std::size_t n, std::size_t i) { return variable(n, i); }
  /// conj(z_{i+1}).
  static Polynomial zbar(std::size_t n, std::size_t i) { return variable(n, i + n); }
  /// Re z_{i+1} = (z + zbar) / 2.
  static Polynomial real_part(std::size_t n, std::size_t i) {
    return (z(n, i) + zbar(n, i)) * scalar_cast<S>(Rational(1, 2));
  }
  /// |z_{i+1}|^2.
  static Polynomial abs2(std::size_t n, std::size_t i) { return z(n, i) * zbar(n, i); }

  const VariableSpace& space() const { return space_; }
  std::size_t nvars() const { return space_.n; }
  const Terms& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Total degree; std::nullopt for the zero polynomial.
  std::optional<int> degree() const {
    if (terms_.empty()) return std::nullopt;
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, sum(e, 0, e.size()));
    return d;
  }

  S coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? S(0) : it->second;
  }

  S constant_term() const { return coefficient(Exponents(space_.size(), 0)); }

  /// Adds c * monomial(e), merging and dropping zero coefficients.
  void add_term(const Exponents& e, const S& c) {
    if (e.size() != space_.size()) throw SpaceError("exponent vector length does not match variable space");
    if (homdom::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (homdom::is_zero(it->second)) terms_.erase(it);
    }
  }

  Polynomial operator-() const {
    Polynomial r(*this);
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }

  Polynomial& operator+=(const Polynomial& o) {
    check_space(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }

  Polynomial& operator-=(const Polynomial& o) {
    check_space(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }

  Polynomial& operator*=(const S& s) {
    if (homdom::is_zero(s)) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }

  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const S& s) { return a *= s; }
  friend Polynomial operator*(const S& s, Polynomial a) { return a *= s; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_space(b);
    Polynomial r(a.nvars());
    Exponents e(a.space_.size());
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
        r.add_term(e, ca * cb);
      }
    }
    return r;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.space_ == b.space_ && a.terms_ == b.terms_;
  }

  Polynomial pow(int k) const {
    if (k < 0) throw DomainError("negative polynomial power");
    Polynomial result = constant(nvars(), S(1));
    Polynomial base = *this;
    while (k > 0) {
      if (k & 1) result *= base;
      k >>= 1;
      if (k > 0) base = base * base;
    }
    return result;
  }

  static int sum(const Exponents& e, std::size_t from, std::size_t to) {
    int s = 0;
    for (std::size_t k = from; k < to; ++k) s += e[k];
    return s;
  }

 private:
  void check_space(const Polynomial& o) const {
    if (space_ != o.space_) throw SpaceError("polynomials live in different variable spaces");
  }

  VariableSpace space_;
  Terms terms_;
};

using HermitianPolynomial = Polynomial<GaussianRational>;
using FloatPolynomial = Polynomial<ComplexFloat>;

/// z-degree and zbar-degree of a monomial.
inline std::pair<int, int> bidegree(const Exponents& e) {
  const std::size_t n = e.size() / 2;
  int k = 0;
  int l = 0;
  for (std::size_t i = 0; i < n; ++i) {
    k += e[i];
    l += e[i + n];
  }
  return {k, l};
}

/// Swaps z_i <-> zbar_i and conjugates coefficients.
template <class S>
Polynomial<S> conjugate(const Polynomial<S>& p) {
  const std::size_t n = p.nvars();
  Polynomial<S> r(n);
  Exponents f(2 * n);
  for (const auto& [e, c] : p.terms()) {
    for (std::size_t i = 0; i < n; ++i) {
      f[i] = e[i + n];
      f[i + n] = e[i];
    }
    r.add_term(f, conj_scalar(c));
  }
  return r;
}

/// Exact conjugation symmetry: conjugate(p) == p.
template <class S>
bool is_real_valued(const Polynomial<S>& p) {
  return conjugate(p) == p;
}

/// True when no conjugate variable occurs.
template <class S>
bool is_holomorphic(const Polynomial<S>& p) {
  for (const auto& [e, c] : p.terms())
    if (bidegree(e).second != 0) return false;
  return true;
}

/// Formal partial derivative treating all 2n variables as independent.
template <class S>
Polynomial<S> partial(const Polynomial<S>& p, std::size_t var) {
  if (var >= p.space().size()) throw SpaceError("variable index out of range");
  Polynomial<S> r(p.nvars());
  for (const auto& [e, c] : p.terms()) {
    if (e[var] == 0) continue;
    Exponents f = e;
    f[var] -= 1;
    r.add_term(f, c * S(e[var]));
  }
  return r;
}

/// Sum of the terms of z-degree k and zbar-degree l.
template <class S>
Polynomial<S> bigraded_component(const Polynomial<S>& p, int k, int l) {
  if (k < 0 || l < 0) throw DomainError("bidegree must be nonnegative");
  Polynomial<S> r(p.nvars());
  for (const auto& [e, c] : p.terms())
    if (bidegree(e) == std::pair{k, l}) r.add_term(e, c);
  return r;
}

/// All nonzero bigraded components keyed by (k, l).
template <class S>
std::map<std::pair<int, int>, Polynomial<S>> bigraded_decomposition(const Polynomial<S>& p) {
  std::map<std::pair<int, int>, Polynomial<S>> out;
  for (const auto& [e, c] : p.terms()) {
    auto [it, inserted] = out.try_emplace(bidegree(e), Polynomial<S>(p.nvars()));
    it->second.add_term(e, c);
  }
  return out;
}

/// Composes p with images for every one of its 2n variables; all images
/// must share one target space.
template <class S>
Polynomial<S> substitute(const Polynomial<S>& p, std::span<const Polynomial<S>> images) {
  if (images.size() != p.space().size())
    throw SpaceError("substitution needs an image for each of the " + std::to_string(p.space().size()) +
                     " variables, got " + std::to_string(images.size()));
  const std::size_t m = images.empty() ? 0 : images.front().nvars();
  for (const auto& img : images)
    if (img.nvars() != m) throw SpaceError("substitution images live in different spaces");

  std::vector<std::vector<Polynomial<S>>> powers(images.size());
  auto power = [&](std::size_t v, int k) -> const Polynomial<S>& {
    auto& cache = powers[v];
    if (cache.empty()) cache.push_back(Polynomial<S>::constant(m, S(1)));
    while (static_cast<int>(cache.size()) <= k) cache.push_back(cache.back() * images[v]);
    return cache[k];
  };

  Polynomial<S> r(m);
  for (const auto& [e, c] : p.terms()) {
    Polynomial<S> term = Polynomial<S>::constant(m, c);
    for (std::size_t v = 0; v < e.size(); ++v)
      if (e[v] > 0) term = term * power(v, e[v]);
    r += term;
  }
  return r;
}

template <class S>
Polynomial<S> substitute(const Polynomial<S>& p, const std::vector<Polynomial<S>>& images) {
  return substitute(p, std::span<const Polynomial<S>>(images));
}

/// Evaluates p at a point of C^n; conjugate variables take conjugated values.
template <class T, class S>
T evaluate(const Polynomial<S>& p, std::span<const T> point) {
  const std::size_t n = p.nvars();
  if (point.size() != n)
    throw SpaceError("evaluation point has " + std::to_string(point.size()) + " coordinates, expected " +
                     std::to_string(n));
  std::vector<T> values(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    values[i] = point[i];
    values[i + n] = conj_scalar(point[i]);
  }
  T result(0);
  for (const auto& [e, c] : p.terms()) {
    T term = scalar_cast<T>(c);
    for (std::size_t v = 0; v < e.size(); ++v)
      for (int k = 0; k < e[v]; ++k) term *= values[v];
    result += term;
  }
  return result;
}

template <class T, class S>
T evaluate(const Polynomial<S>& p, const std::vector<T>& point) {
  return evaluate<T, S>(p, std::span<const T>(point));
}

/// Coefficientwise conversion (exact -> floating or identity).
template <class To, class From>
Polynomial<To> convert(const Polynomial<From>& p) {
  if constexpr (std::is_same_v<To, From>) {
    return p;
  } else {
    Polynomial<To> r(p.nvars());
    for (const auto& [e, c] : p.terms()) r.add_term(e, scalar_cast<To>(c));
    return r;
  }
}

/// Largest coefficient magnitude; 0 for the zero polynomial.
template <class S>
double max_abs_coefficient(const Polynomial<S>& p) {
  double m = 0.0;
  for (const auto& [e, c] : p.terms()) m = std::max(m, magnitude(c));
  return m;
}

/// Copies p into a space with n' >= n holomorphic variables (new variables unused).
template <class S>
Polynomial<S> extend_space(const Polynomial<S>& p, std::size_t new_n) {
  const std::size_t n = p.nvars();
  if (new_n < n) throw SpaceError("cannot shrink a variable space by extension");
  Polynomial<S> r(new_n);
  Exponents f(2 * new_n, 0);
  for (const auto& [e, c] : p.terms()) {
    std::fill(f.begin(), f.end(), 0);
    for (std::size_t i = 0; i < n; ++i) {
      f[i] = e[i];
      f[i + new_n] = e[i + n];
    }
    r.add_term(f, c);
  }
  return r;
}

}  // namespace homdom
