#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "homdom/polynomial.hpp"

namespace homdom {

/// Canonical text form, e.g. "(3/5+4/5i)*z1^2*zb1 + (-1)*z4". The zero
/// polynomial prints as "0".
template <class S>
std::string to_string(const Polynomial<S>& p) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto& space = p.space();
  for (const auto& [e, c] : p.terms()) {
    if (!out.empty()) out += " + ";
    out += "(" + ScalarTraits<S>::str(c) + ")";
    for (std::size_t v = 0; v < e.size(); ++v) {
      if (e[v] == 0) continue;
      out += "*" + space.name(v);
      if (e[v] > 1) out += "^" + std::to_string(e[v]);
    }
  }
  return out;
}

/// Parses the literal grammar
///   expr   := [+|-] term { (+|-) term }
///   term   := factor { '*' factor }
///   factor := '(' expr ')' ['^' int] | rational ['i'] | 'i' | ('z'|'zb') int ['^' int]
/// into a polynomial with n holomorphic variables. Throws ParseError.
HermitianPolynomial parse_polynomial(std::string_view text, std::size_t n);

/// Parses "a", "a+bi", "bi", "-i", ... into a Gaussian rational.
GaussianRational parse_gaussian(std::string_view text);

/// Parses a whitespace- or comma-separated list of rationals.
std::vector<Rational> parse_rational_list(std::string_view text);

/// Parses a comma-separated list of Gaussian rationals.
std::vector<GaussianRational> parse_gaussian_list(std::string_view text);

}  // namespace homdom
