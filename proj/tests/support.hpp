#pragma once

#include "homdom/polynomial.hpp"
#include "homdom/random.hpp"

namespace homdom::testing {

inline HermitianPolynomial random_poly(Rng& rng, std::size_t n, int terms = 4, int max_exp = 2) {
  HermitianPolynomial p(n);
  std::uniform_int_distribution<int> ex(0, max_exp);
  for (int t = 0; t < terms; ++t) {
    Exponents e(2 * n);
    for (auto& k : e) k = ex(rng);
    p.add_term(e, random_gaussian(rng, -3, 3, 4));
  }
  return p;
}

inline HermitianPolynomial random_holomorphic(Rng& rng, std::size_t n, int terms = 3) {
  HermitianPolynomial p(n);
  std::uniform_int_distribution<int> ex(0, 2);
  for (int t = 0; t < terms; ++t) {
    Exponents e(2 * n, 0);
    for (std::size_t i = 0; i < n; ++i) e[i] = ex(rng);
    p.add_term(e, random_gaussian(rng, -2, 2, 3));
  }
  return p;
}

inline std::vector<GaussianRational> random_point(Rng& rng, std::size_t n) {
  std::vector<GaussianRational> pt;
  for (std::size_t i = 0; i < n; ++i) pt.push_back(random_gaussian(rng, -2, 2, 5));
  return pt;
}

}  // namespace homdom::testing
