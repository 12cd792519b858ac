#include "homdom/lie.hpp"

namespace homdom {

MatrixC3 elementary(int i, int j) {
  MatrixC3 m = MatrixC3::Constant(GaussianRational(0));
  m(i - 1, j - 1) = 1;
  return m;
}

MatrixC3 diag3(const GaussianRational& a, const GaussianRational& b, const GaussianRational& c) {
  MatrixC3 m = MatrixC3::Constant(GaussianRational(0));
  m(0, 0) = a;
  m(1, 1) = b;
  m(2, 2) = c;
  return m;
}

MatrixC3 bracket(const MatrixC3& x, const MatrixC3& y) { return MatrixC3(x * y - y * x); }

GaussianRational killing(const MatrixC3& x, const MatrixC3& y) { return MatrixC3(x * y).trace(); }

namespace {

// Coordinates of a matrix: 9 complex entries, or 18 rationals (real parts
// then imaginary parts) for real spans.
MatrixQi coordinates(const std::vector<MatrixC3>& xs, Field field) {
  const Eigen::Index rows = field == Field::complex ? 9 : 18;
  MatrixQi m(rows, static_cast<Eigen::Index>(xs.size()));
  for (std::size_t k = 0; k < xs.size(); ++k) {
    const auto col = static_cast<Eigen::Index>(k);
    for (Eigen::Index e = 0; e < 9; ++e) {
      const GaussianRational& v = xs[k](e / 3, e % 3);
      if (field == Field::complex) {
        m(e, col) = v;
      } else {
        m(e, col) = GaussianRational(v.real());
        m(e + 9, col) = GaussianRational(v.imag());
      }
    }
  }
  return m;
}

Eigen::Index span_rank(const std::vector<MatrixC3>& xs, Field field) {
  if (xs.empty()) return 0;
  return exact_rank(coordinates(xs, field));
}

}  // namespace

LieSubspace::LieSubspace(std::vector<MatrixC3> spanning, Field field) : field_(field) {
  if (spanning.empty()) return;
  const auto ech = reduced_row_echelon(coordinates(spanning, field));
  for (auto c : ech.pivot_columns) basis_.push_back(spanning[static_cast<std::size_t>(c)]);
}

bool LieSubspace::contains(const MatrixC3& x) const {
  std::vector<MatrixC3> ext = basis_;
  ext.push_back(x);
  return span_rank(ext, field_) == static_cast<Eigen::Index>(basis_.size());
}

std::vector<MatrixC3> sl3_basis() {
  return {elementary(1, 2), elementary(1, 3), elementary(2, 1), elementary(2, 3), elementary(3, 1),
          elementary(3, 2), diag3(1, -1, 0),  diag3(0, 1, -1)};
}

LieSubspace sl3() { return LieSubspace(sl3_basis(), Field::complex); }

MatrixQi killing_gram(const std::vector<MatrixC3>& xs) {
  const auto n = static_cast<Eigen::Index>(xs.size());
  MatrixQi g(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      g(i, j) = killing(xs[static_cast<std::size_t>(i)], xs[static_cast<std::size_t>(j)]);
  return g;
}

LieSubspace perp(const LieSubspace& s) {
  if (s.field() != Field::complex) throw DomainError("Killing complement is taken over C");
  const auto base = sl3_basis();
  if (s.dimension() == 0) return LieSubspace(base, Field::complex);
  MatrixQi a(static_cast<Eigen::Index>(s.dimension()), 8);
  for (std::size_t i = 0; i < s.dimension(); ++i)
    for (std::size_t k = 0; k < 8; ++k)
      a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = killing(s.basis()[i], base[k]);
  const MatrixQi ker = nullspace(a);
  std::vector<MatrixC3> out;
  for (Eigen::Index c = 0; c < ker.cols(); ++c) {
    MatrixC3 x = MatrixC3::Constant(GaussianRational(0));
    for (std::size_t k = 0; k < 8; ++k) x += base[k] * ker(static_cast<Eigen::Index>(k), c);
    out.push_back(x);
  }
  return LieSubspace(out, Field::complex);
}

std::size_t ad_kernel_dim(const MatrixC3& p, const LieSubspace& s) {
  std::vector<MatrixC3> images;
  for (const auto& x : s.basis()) images.push_back(bracket(p, x));
  return s.dimension() - static_cast<std::size_t>(span_rank(images, s.field()));
}

SubalgebraResult is_subalgebra(const LieSubspace& s) {
  SubalgebraResult r;
  const auto& b = s.basis();
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i + 1; j < b.size(); ++j)
      if (!s.contains(bracket(b[i], b[j]))) {
        r.closed = false;
        r.witness = std::pair{i, j};
        return r;
      }
  return r;
}

LieSubspace pattern_subalgebra(const std::array<std::array<bool, 3>, 3>& mask) {
  std::vector<MatrixC3> spanning;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j && mask[i][j]) spanning.push_back(elementary(i + 1, j + 1));
  if (mask[0][0] && mask[1][1]) spanning.push_back(diag3(1, -1, 0));
  if (mask[1][1] && mask[2][2]) spanning.push_back(diag3(0, 1, -1));
  if (mask[0][0] && mask[2][2]) spanning.push_back(diag3(1, 0, -1));
  return LieSubspace(spanning, Field::complex);
}

LieSubspace first_candidate() {
  return pattern_subalgebra({{{true, true, true}, {false, true, true}, {false, true, true}}});
}

LieSubspace second_candidate() {
  return pattern_subalgebra({{{true, true, true}, {false, true, false}, {true, true, true}}});
}

std::vector<JordanCase> jordan_test_set() {
  return {
      {"E12", elementary(1, 2)},
      {"E12+E23", MatrixC3(elementary(1, 2) + elementary(2, 3))},
      {"diag(1,2,-3)", diag3(1, 2, -3)},
      {"diag(1,1,-2)", diag3(1, 1, -2)},
      {"diag(1,-1,0)", diag3(1, -1, 0)},
      {"E12+diag(1,1,-2)", MatrixC3(elementary(1, 2) + diag3(1, 1, -2))},
  };
}

LieSubspace unitary_algebra(const MatrixQi& h, bool traceless) {
  if (h.rows() != 3 || h.cols() != 3) throw DomainError("unitary algebra needs a 3x3 form");
  const MatrixC3 hf = h;
  std::vector<MatrixC3> real_basis;
  for (int e = 0; e < 9; ++e) real_basis.push_back(elementary(e / 3 + 1, e % 3 + 1));
  for (int e = 0; e < 9; ++e) real_basis.push_back(MatrixC3(elementary(e / 3 + 1, e % 3 + 1) * GaussianRational::i()));
  MatrixQi a = MatrixQi::Constant(traceless ? 20 : 18, 18, GaussianRational(0));
  for (std::size_t k = 0; k < real_basis.size(); ++k) {
    const MatrixC3& x = real_basis[k];
    const MatrixC3 c = x.transpose() * hf + hf * MatrixC3(conjugate_of(x));
    const auto col = static_cast<Eigen::Index>(k);
    for (Eigen::Index e = 0; e < 9; ++e) {
      a(e, col) = GaussianRational(c(e / 3, e % 3).real());
      a(e + 9, col) = GaussianRational(c(e / 3, e % 3).imag());
    }
    if (traceless) {
      a(18, col) = GaussianRational(x.trace().real());
      a(19, col) = GaussianRational(x.trace().imag());
    }
  }
  const MatrixQi ker = nullspace(a);
  std::vector<MatrixC3> out;
  for (Eigen::Index c = 0; c < ker.cols(); ++c) {
    MatrixC3 x = MatrixC3::Constant(GaussianRational(0));
    for (std::size_t k = 0; k < 18; ++k) x += real_basis[k] * ker(static_cast<Eigen::Index>(k), c);
    out.push_back(x);
  }
  return LieSubspace(out, Field::real);
}

MatrixQi diag_form_21() {
  MatrixQi h = MatrixQi::Constant(3, 3, GaussianRational(0));
  h(0, 0) = 1;
  h(1, 1) = 1;
  h(2, 2) = -1;
  return h;
}

std::size_t stabilizer_up_to_scale_dim(const VectorQi& v, const MatrixQi& h) {
  if (v.size() != 3) throw DomainError("stabilizer needs a 3-vector");
  bool nonzero = false;
  for (Eigen::Index i = 0; i < 3; ++i) nonzero = nonzero || !v(i).is_zero();
  if (!nonzero) throw DomainError("stabilizer of the zero vector");
  const LieSubspace su = unitary_algebra(h, true);
  const auto& b = su.basis();
  static constexpr std::pair<int, int> minors[] = {{0, 1}, {0, 2}, {1, 2}};
  MatrixQi a(6, static_cast<Eigen::Index>(b.size()));
  for (std::size_t k = 0; k < b.size(); ++k) {
    const VectorQi xv = MatrixQi(b[k]) * v;
    for (int m = 0; m < 3; ++m) {
      const auto [i, j] = minors[m];
      const GaussianRational w = xv(i) * v(j) - xv(j) * v(i);
      a(2 * m, static_cast<Eigen::Index>(k)) = GaussianRational(w.real());
      a(2 * m + 1, static_cast<Eigen::Index>(k)) = GaussianRational(w.imag());
    }
  }
  return b.size() - static_cast<std::size_t>(exact_rank(a));
}

MatrixC3 random_pseudo_unitary(Rng& rng) {
  auto phase = [&] { return phase_from_parameter(random_rational(rng, -3, 3, 5)).value(); };
  const MatrixC3 d1 = diag3(phase(), phase(), phase());
  const MatrixC3 d2 = diag3(phase(), phase(), phase());
  const UnimodularPhase rot = phase_from_parameter(random_rational(rng, -3, 3, 5));
  MatrixC3 r = MatrixC3::Identity();
  r(0, 0) = rot.value().real();
  r(0, 1) = -rot.value().imag();
  r(1, 0) = rot.value().imag();
  r(1, 1) = rot.value().real();
  Rational t = random_rational(rng, -1, 1, 6) * Rational(1, 2);
  const Rational ch = (Rational(1) + t * t) / (Rational(1) - t * t);
  const Rational sh = Rational(2) * t / (Rational(1) - t * t);
  MatrixC3 boost = MatrixC3::Identity();
  boost(1, 1) = ch;
  boost(1, 2) = sh;
  boost(2, 1) = sh;
  boost(2, 2) = ch;
  return d1 * r * boost * d2;
}

std::vector<MatrixC3> isotropy_generators() {
  const GaussianRational i = GaussianRational::i();
  return {
      diag3(-1, 1, 0),
      diag3(i, i, 0),
      diag3(0, 0, i),
      MatrixC3(elementary(2, 1) * i),
      MatrixC3(elementary(2, 3) - elementary(3, 1)),
      MatrixC3((elementary(2, 3) + elementary(3, 1)) * i),
  };
}

bool proportional(const VectorQi& v, const VectorQi& w) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    for (Eigen::Index j = i + 1; j < v.size(); ++j)
      if (!(v(i) * w(j) - v(j) * w(i)).is_zero()) return false;
  return true;
}

LineImageResult line_image_test(const LieSubspace& s, const VectorQi& w) {
  LineImageResult r;
  for (std::size_t k = 0; k < s.basis().size(); ++k) {
    const VectorQi xw = MatrixQi(s.basis()[k]) * w;
    if (!proportional(xw, w)) {
      r.into_line = false;
      r.witness = k;
      break;
    }
  }
  VectorQi v(3);
  v << GaussianRational(0), GaussianRational(1), GaussianRational(0);
  bool nonzero = false;
  for (Eigen::Index i = 0; i < w.size(); ++i) nonzero = nonzero || !w(i).is_zero();
  r.proportional_to_v = nonzero && proportional(v, w);
  return r;
}

}  // namespace homdom
