#include "homdom/chern_moser.hpp"

namespace homdom {

HermitianForm::HermitianForm(MatrixQi h) : h_(std::move(h)) {
  if (h_.rows() != h_.cols()) throw DomainError("Hermitian form needs a square matrix");
  if (!(adjoint_of(h_) == h_)) throw DomainError("form matrix is not Hermitian");
  g_ = exact_inverse(h_);
}

HermitianForm HermitianForm::pairing() {
  MatrixQi h = MatrixQi::Constant(3, 3, GaussianRational(0));
  h(0, 1) = 1;
  h(1, 0) = 1;
  h(2, 2) = 1;
  return HermitianForm(h);
}

HermitianForm HermitianForm::diagonal(int p, int m) {
  if (m < 1 || p < 0 || p > m) throw DomainError("diagonal form needs 0 <= p <= m");
  MatrixQi h = MatrixQi::Constant(m, m, GaussianRational(0));
  for (int j = 0; j < m; ++j) h(j, j) = j < p ? 1 : -1;
  return HermitianForm(h);
}

Inertia HermitianForm::signature() const { return hermitian_inertia(h_); }

HermitianPolynomial HermitianForm::polynomial() const {
  const std::size_t m = dimension();
  HermitianPolynomial p(m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      const auto& c = h_(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b));
      if (!c.is_zero()) p += HermitianPolynomial::z(m, a) * HermitianPolynomial::zbar(m, b) * c;
    }
  return p;
}

HermitianPolynomial trace_op(const HermitianPolynomial& p, const HermitianForm& form) {
  const std::size_t m = form.dimension();
  if (p.nvars() != m) throw SpaceError("trace operator: polynomial and form disagree on dimension");
  HermitianPolynomial out(m);
  for (std::size_t a = 0; a < m; ++a) {
    const auto da = partial(p, a);
    if (da.is_zero()) continue;
    for (std::size_t b = 0; b < m; ++b) {
      const auto& g = form.g()(static_cast<Eigen::Index>(b), static_cast<Eigen::Index>(a));
      if (g.is_zero()) continue;
      out += partial(da, b + m) * g;
    }
  }
  return out;
}

HermitianPolynomial trace_power(const HermitianPolynomial& p, const HermitianForm& form, int k) {
  HermitianPolynomial out = p;
  for (int i = 0; i < k; ++i) out = trace_op(out, form);
  return out;
}

HermitianPolynomial NormalFormSurface::component(int k, int l) const {
  auto it = components.find({k, l});
  return it == components.end() ? HermitianPolynomial(form.dimension()) : it->second;
}

NormalFormSurface normal_form_from_rho(const HermitianPolynomial& rho) {
  const std::size_t n = rho.nvars();
  if (n < 2) throw DomainError("normal form needs at least two variables");
  const std::size_t m = n - 1;
  // -(rho - Re w) = <z,z> + F
  HermitianPolynomial rest = HermitianPolynomial::real_part(n, m) - rho;
  HermitianPolynomial restricted(m);
  for (const auto& [e, c] : rest.terms()) {
    if (e[m] != 0 || e[m + n] != 0) throw DomainError("defining function is not of the form Re w = f(z, zbar)");
    Exponents f(2 * m);
    for (std::size_t i = 0; i < m; ++i) {
      f[i] = e[i];
      f[i + m] = e[i + n];
    }
    restricted.add_term(f, c);
  }
  MatrixQi h = MatrixQi::Constant(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(m), GaussianRational(0));
  std::map<std::pair<int, int>, HermitianPolynomial> comps;
  for (auto& [kl, part] : bigraded_decomposition(restricted)) {
    if (kl == std::pair{1, 1}) {
      for (const auto& [e, c] : part.terms()) {
        Eigen::Index a = 0, b = 0;
        for (std::size_t i = 0; i < m; ++i) {
          if (e[i]) a = static_cast<Eigen::Index>(i);
          if (e[i + m]) b = static_cast<Eigen::Index>(i);
        }
        h(a, b) = c;
      }
    } else if (kl.first >= 2 && kl.second >= 2) {
      comps.emplace(kl, part);
    } else {
      throw DomainError("component of bidegree (" + std::to_string(kl.first) + "," + std::to_string(kl.second) +
                        ") is not allowed in normal form");
    }
  }
  return NormalFormSurface{HermitianForm(h), std::move(comps)};
}

NormalFormReport normal_form_check(const NormalFormSurface& s) {
  NormalFormReport report;
  const struct {
    const char* name;
    int k, l, power;
  } conditions[] = {{"tr F22", 2, 2, 1}, {"tr^2 F23", 2, 3, 2}, {"tr^3 F33", 3, 3, 3}};
  for (const auto& c : conditions) {
    TraceCondition tc;
    tc.name = c.name;
    tc.residual = trace_power(s.component(c.k, c.l), s.form, c.power);
    tc.holds = tc.residual.is_zero();
    report.conditions.push_back(std::move(tc));
  }
  return report;
}

Umbilicity umbilicity_at_origin(const NormalFormSurface& s) {
  Umbilicity u;
  const auto f22 = s.component(2, 2);
  if (!f22.is_zero()) {
    u.umbilic = false;
    u.witness = f22;
  }
  return u;
}

CounterexampleTrace counterexample_trace(const HermitianForm& form, const Rational& c) {
  const HermitianPolynomial q = form.polynomial();
  CounterexampleTrace out;
  out.trace = trace_op(q.pow(2) * GaussianRational(c), form);
  out.expected = q * GaussianRational(Rational(8) * c);
  out.matches = out.trace == out.expected;
  return out;
}

namespace {

template <class S>
std::vector<Polynomial<S>> linear_images(const Matrix<S>& u) {
  const auto m = static_cast<std::size_t>(u.rows());
  std::vector<Polynomial<S>> images(2 * m, Polynomial<S>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const S& c = u(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
      if (is_zero(c)) continue;
      images[i] += Polynomial<S>::z(m, j) * c;
      images[i + m] += Polynomial<S>::zbar(m, j) * conj_scalar(c);
    }
  return images;
}

}  // namespace

ScalingReport linear_scaling_check(const NormalFormSurface& s, const MatrixQi& u, const Rational& lambda) {
  const auto m = static_cast<Eigen::Index>(s.form.dimension());
  if (u.rows() != m || u.cols() != m) throw SpaceError("scaling matrix has the wrong size");
  if (lambda.sign() <= 0) throw DomainError("lambda must be positive");
  ScalingReport r;
  const MatrixQi lhs = u.transpose() * s.form.h() * conjugate_of(u);
  r.preserves_form = lhs == s.form.h();
  const auto f22 = s.component(2, 2);
  r.residual = substitute(f22, linear_images<GaussianRational>(u)) - f22 * GaussianRational(lambda.pow(-2));
  r.identity_holds = r.residual.is_zero();
  r.residual_norm = max_abs_coefficient(r.residual);
  return r;
}

ScalingReport linear_scaling_check(const NormalFormSurface& s, const Eigen::MatrixXcd& u, double lambda,
                                   double tolerance) {
  const auto m = static_cast<Eigen::Index>(s.form.dimension());
  if (u.rows() != m || u.cols() != m) throw SpaceError("scaling matrix has the wrong size");
  if (!(lambda > 0)) throw DomainError("lambda must be positive");
  Eigen::MatrixXcd h(m, m);
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = 0; j < m; ++j) h(i, j) = to_complex(s.form.h()(i, j));
  ScalingReport r;
  r.preserves_form = (u.transpose() * h * u.conjugate() - h).cwiseAbs().maxCoeff() <= 1e-10;
  const auto f22 = convert<ComplexFloat>(s.component(2, 2));
  const FloatPolynomial residual =
      substitute(f22, linear_images<ComplexFloat>(u)) - f22 * ComplexFloat(1.0 / (lambda * lambda), 0.0);
  r.residual_norm = max_abs_coefficient(residual);
  r.identity_holds = r.residual_norm <= tolerance;
  return r;
}

}  // namespace homdom
