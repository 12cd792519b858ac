#include "homdom/catalog.hpp"

#include <cctype>
#include <cmath>
#include <sstream>

#include "homdom/poly_io.hpp"

namespace homdom {

namespace {

using HP = HermitianPolynomial;

HP zv(std::size_t n, std::size_t i) { return HP::z(n, i); }
HP cst(std::size_t n, const GaussianRational& c) { return HP::constant(n, c); }

GaussianRational gr(const Rational& r) { return GaussianRational(r); }

}  // namespace

std::vector<GaussianRational> to_complex_point(std::span<const Rational> x) {
  return {x.begin(), x.end()};
}

// ---------------------------------------------------------------------------

HermitianPolynomial gamma_graph(const Rational& alpha) {
  const std::size_t n = 3;
  return zv(n, 0) * zv(n, 1) + zv(n, 2).pow(2) + zv(n, 0).pow(2) * zv(n, 2) + zv(n, 0).pow(4) * gr(alpha);
}

Hypersurface make_gamma(const Rational& alpha) {
  return Hypersurface(tube_rho(gamma_graph(alpha)), "gamma(alpha=" + alpha.str() + ")");
}

SidedDomain make_omega(const Rational& alpha, int side) {
  return SidedDomain(make_gamma(alpha), side,
                     "omega(alpha=" + alpha.str() + ",side=" + (side > 0 ? ">" : "<") + ")");
}

std::string to_string(GeneratorKind kind) {
  switch (kind) {
    case GeneratorKind::phi:
      return "phi";
    case GeneratorKind::psi:
      return "psi";
    case GeneratorKind::mu:
      return "mu";
    case GeneratorKind::nu:
      return "nu";
  }
  return "?";
}

GeneratorKind parse_generator_kind(const std::string& text) {
  if (text == "phi") return GeneratorKind::phi;
  if (text == "psi") return GeneratorKind::psi;
  if (text == "mu") return GeneratorKind::mu;
  if (text == "nu") return GeneratorKind::nu;
  throw ParseError("unknown generator '" + text + "'");
}

namespace {

template <class R>
R graph_radicand(const R& alpha, std::span<const R> x) {
  return x[3] - x[0] * x[1] - x[2] * x[2] - x[0] * x[0] * x[2] - alpha * x[0] * x[0] * x[0] * x[0];
}

template <class R>
TransitiveParams<R> solve_rst(const R& alpha, std::span<const R> x, const R& q) {
  const R x1 = x[0];
  const R x13 = x1 * x1 * x1;
  TransitiveParams<R> p{q, x1 / q, R(0), R(0)};
  p.s = (x[1] + (R(4) / R(3)) * alpha * (R(4) * alpha - R(1)) * x13 + x1 * x[2] + R(2) * alpha * x13) / (q * q * q);
  p.t = (x[2] + R(2) * alpha * x1 * x1) / (q * q);
  return p;
}

}  // namespace

std::optional<TransitiveParams<Rational>> transitive_params_omega(const Rational& alpha,
                                                                  std::span<const Rational> target) {
  if (target.size() != 4) throw SpaceError("target must have four coordinates");
  const Rational radicand = graph_radicand(alpha, target);
  if (radicand.sign() <= 0) throw DomainError("target is not strictly above the graph");
  const auto q = root_exact(radicand, 4);
  if (!q) return std::nullopt;
  return solve_rst(alpha, target, *q);
}

TransitiveParams<double> transitive_params_omega(double alpha, std::span<const double> target) {
  if (target.size() != 4) throw SpaceError("target must have four coordinates");
  const double radicand = graph_radicand(alpha, target);
  if (!(radicand > 0)) throw DomainError("target is not strictly above the graph");
  return solve_rst(alpha, target, nth_root_float(radicand, 4));
}

// ---------------------------------------------------------------------------

HermitianPolynomial m_rho(int sign) {
  if (sign != 1 && sign != -1) throw DomainError("model sign must be +1 or -1");
  const std::size_t n = 4;
  HP h = HP::z(n, 0) * HP::zbar(n, 1) + HP::z(n, 1) * HP::zbar(n, 0) + HP::abs2(n, 2) +
         HP::abs2(n, 0).pow(2) * GaussianRational(sign);
  return HP::real_part(n, 3) - h;
}

Hypersurface make_m(int sign) { return Hypersurface(m_rho(sign), sign > 0 ? "M_plus" : "M_minus"); }

SidedDomain make_d(int sign, int side) {
  return SidedDomain(make_m(sign), side,
                     std::string(sign > 0 ? "D_plus" : "D_minus") + "(side=" + (side > 0 ? ">" : "<") + ")");
}

Hypersurface make_d0() {
  const std::size_t n = 4;
  return Hypersurface(HP::real_part(n, 3) - HP::abs2(n, 0) - HP::abs2(n, 1) + HP::abs2(n, 2), "D0");
}

RescaledCertificate certify(const Equivalence& eq, double tolerance) {
  return rescaled_certificate(eq.source_rho, eq.target_rho, eq.map, tolerance);
}

int normalizer_target_sign(const Rational& alpha) { return (alpha - Rational(1, 12)).sign(); }

Equivalence make_normalizer(const Rational& alpha) {
  const std::size_t n = 4;
  const HP z1 = zv(n, 0), z2 = zv(n, 1), z3 = zv(n, 2), z4 = zv(n, 3);
  Equivalence eq;
  eq.source_rho = make_gamma(alpha).rho;
  const RadicalScalar root2 = RadicalScalar::power(Rational(2), Rational(1, 2));
  const int sign = normalizer_target_sign(alpha);
  if (sign == 0) {
    const HP shear = z2 + z1 * z3 + z1.pow(3) * gr(Rational(1, 12));
    eq.name = "normalizer(alpha=1/12)";
    eq.map.inner = HoloPolyMap(n, {z1 + shear, z3 + z1.pow(2) * gr(Rational(1, 4)), z1 - shear,
                                   z4 * GaussianRational(4) - z1 * z2 * GaussianRational(2) -
                                       z3.pow(2) * GaussianRational(2) - z1.pow(2) * z3 -
                                       z1.pow(4) * gr(Rational(1, 24))});
    eq.map.scale = {root2.pow(Rational(-1)), root2, root2.pow(Rational(-1)), RadicalScalar()};
    eq.target_rho = make_d0().rho;
    return eq;
  }
  const Rational k4 = (Rational(3, 2) * (alpha - Rational(1, 12))).abs();
  const RadicalScalar k = RadicalScalar::power(k4, Rational(1, 4));
  eq.name = "normalizer(alpha=" + alpha.str() + ")";
  eq.map.inner = HoloPolyMap(n, {z1, z2 + z1 * z3 + z1.pow(3) * gr(alpha), z3 + z1.pow(2) * gr(Rational(1, 4)),
                                 z4 * GaussianRational(4) - z1 * z2 * GaussianRational(2) -
                                     z3.pow(2) * GaussianRational(2) - z1.pow(2) * z3 -
                                     z1.pow(4) * gr(alpha / Rational(2))});
  eq.map.scale = {k, k.pow(Rational(-1)), root2, RadicalScalar()};
  eq.target_rho = m_rho(sign);
  return eq;
}

// ---------------------------------------------------------------------------

Rational PParams::constraint_defect() const {
  return d.norm2() + Rational(2) * q.pow(3) * (phi.value() * b.conj()).real();
}

void PParams::validate() const {
  if (sign != 1 && sign != -1) throw ConstraintError("group sign must be +1 or -1");
  if (q.sign() <= 0) throw ConstraintError("q must be positive");
  if ((phi.value() * b.conj()).real().sign() > 0) throw ConstraintError("Re(e^{i phi} conj b) must be <= 0");
  if (!constraint_defect().is_zero())
    throw ConstraintError("|d|^2 != -2 q^3 Re(e^{i phi} conj b): defect " + constraint_defect().str());
}

std::string to_string(const PParams& p) {
  std::ostringstream os;
  os << "q=" << p.q.str() << " e^{i phi}=" << p.phi.value().str() << " e^{i psi}=" << p.psi.value().str()
     << " u=" << p.u.str() << " rho=" << p.rho.str() << " sigma=" << p.sigma.str() << " tau=" << p.tau.str()
     << " b=" << p.b.str() << " d=" << p.d.str() << " sign=" << (p.sign > 0 ? "+" : "-");
  return os.str();
}

namespace {

HoloPolyMap p_element_impl(const PParams& p, bool literal) {
  const std::size_t n = 4;
  const HP z1 = zv(n, 0), z2 = zv(n, 1), z3 = zv(n, 2), z4 = zv(n, 3);
  const GaussianRational q = gr(p.q);
  const GaussianRational q2 = q * q, q3 = q2 * q, q4 = q2 * q2;
  const GaussianRational e = p.phi.value();
  const GaussianRational f = p.psi.value();
  const GaussianRational s(p.sign);
  const GaussianRational two(2);
  const GaussianRational rb = p.rho.conj(), sb = p.sigma.conj(), tb = p.tau.conj(), db = p.d.conj();
  const GaussianRational rho2 = gr(p.rho.norm2());

  HP f1 = z1 * (q * e) + cst(n, p.rho);
  HP f2 = z1 * (-s * two * rho2 * q * e + q2 * p.b) + z2 * (q3 * e) + z3 * (q * p.d) -
          z1.pow(2) * (s * two * rb * q2 * e * e) + cst(n, p.sigma);
  HP f3 = z1 * (-db * e * f) + z3 * (q2 * f) + cst(n, p.tau);
  GaussianRational constant = p.rho * sb + p.sigma * rb + GaussianRational(0, p.u);
  if (literal)
    constant += p.tau * p.tau + s * p.rho.pow(4);
  else
    constant += gr(p.tau.norm2()) + s * rho2 * rho2;
  HP f4 = z1 * (two * sb * q * e + two * rb * q2 * p.b - two * tb * db * e * f) + z2 * (two * rb * q3 * e) +
          z3 * (two * rb * q * p.d + two * tb * q2 * f) + z4 * q4 - z1.pow(2) * (s * two * rb * rb * q2 * e * e) +
          cst(n, constant);
  return HoloPolyMap(n, {f1, f2, f3, f4});
}

Exponents lin(std::size_t i) {
  Exponents e(8, 0);
  e[i] = 1;
  return e;
}

}  // namespace

HoloPolyMap make_p_element(const PParams& p) {
  p.validate();
  return p_element_impl(p, false);
}

HoloPolyMap make_p_element_unchecked(const PParams& p) { return p_element_impl(p, false); }

HoloPolyMap make_p_element_literal(const PParams& p) { return p_element_impl(p, true); }

PParams recover_p_params(const HoloPolyMap& f, int sign) {
  if (f.n_in() != 4 || f.n_out() != 4) throw ClosureViolation("group elements act on C^4");
  try {
    PParams p;
    p.sign = sign;
    const GaussianRational q4 = f[3].coefficient(lin(3));
    if (!q4.is_real() || q4.real().sign() <= 0) throw ClosureViolation("z4 coefficient is not a positive real");
    const auto q = root_exact(q4.real(), 4);
    if (!q) throw ClosureViolation("z4 coefficient is not a rational fourth power");
    p.q = *q;
    const GaussianRational qg = gr(p.q);
    p.phi = UnimodularPhase(f[0].coefficient(lin(0)) / qg);
    p.psi = UnimodularPhase(f[2].coefficient(lin(2)) / (qg * qg));
    p.rho = f[0].constant_term();
    p.sigma = f[1].constant_term();
    p.tau = f[2].constant_term();
    p.u = f[3].constant_term().imag();
    p.d = f[1].coefficient(lin(2)) / qg;
    p.b = (f[1].coefficient(lin(0)) + GaussianRational(2 * sign) * gr(p.rho.norm2()) * qg * p.phi.value()) /
          (qg * qg);
    p.validate();
    if (!(p_element_impl(p, false) == f)) throw ClosureViolation("recovered parameters do not regenerate the map");
    return p;
  } catch (const ClosureViolation&) {
    throw;
  } catch (const Error& e) {
    throw ClosureViolation(std::string("parameter recovery failed: ") + e.what());
  }
}

PParams p_compose(const PParams& a, const PParams& b) {
  if (a.sign != b.sign) throw DomainError("cannot compose elements of different groups");
  return recover_p_params(compose(make_p_element(a), make_p_element(b)), a.sign);
}

PParams p_inverse(const PParams& a) {
  static constexpr std::array<std::size_t, 4> order{0, 2, 1, 3};
  return recover_p_params(invert_triangular(make_p_element(a), order), a.sign);
}

MatrixQi make_isotropy_matrix(const PParams& p) {
  if (!p.translation_free()) throw DomainError("isotropy matrices need rho = sigma = tau = u = 0");
  p.validate();
  const GaussianRational q = gr(p.q);
  const GaussianRational e = p.phi.value(), f = p.psi.value();
  MatrixQi m = MatrixQi::Constant(3, 3, GaussianRational(0));
  m(0, 0) = e / q;
  m(1, 0) = p.b;
  m(1, 1) = q * e;
  m(1, 2) = p.d / q;
  m(2, 0) = -p.d.conj() * e * f / (q * q);
  m(2, 2) = f;
  return m;
}

MatrixQi pairing_form() {
  MatrixQi h = MatrixQi::Constant(3, 3, GaussianRational(0));
  h(0, 1) = 1;
  h(1, 0) = 1;
  h(2, 2) = 1;
  return h;
}

PParams random_p_params(Rng& rng, int sign) {
  PParams p;
  p.sign = sign;
  p.q = random_positive_rational(rng, 3, 4);
  p.phi = phase_from_parameter(random_rational(rng, -3, 3, 4));
  p.psi = phase_from_parameter(random_rational(rng, -3, 3, 4));
  p.u = random_rational(rng, -3, 3, 4);
  p.rho = random_gaussian(rng, -2, 2, 4);
  p.sigma = random_gaussian(rng, -2, 2, 4);
  p.tau = random_gaussian(rng, -2, 2, 4);
  p.d = random_gaussian(rng, -2, 2, 4);
  const Rational re_beta = -p.d.norm2() / (Rational(2) * p.q.pow(3));
  const GaussianRational beta(re_beta, random_rational(rng, -2, 2, 4));
  p.b = p.phi.value() * beta;
  return p;
}

FloatPolyMap make_p_element(const PParamsF& p) {
  using FP = FloatPolynomial;
  const std::size_t n = 4;
  auto z = [&](std::size_t i) { return FP::z(n, i); };
  auto c = [&](ComplexFloat v) { return FP::constant(n, v); };
  const ComplexFloat q(p.q, 0.0);
  const ComplexFloat q2 = q * q, q3 = q2 * q, q4 = q2 * q2;
  const ComplexFloat e = std::polar(1.0, p.phi), f = std::polar(1.0, p.psi);
  const ComplexFloat s(p.sign, 0.0), two(2.0, 0.0);
  const ComplexFloat rb = std::conj(p.rho), sb = std::conj(p.sigma), tb = std::conj(p.tau), db = std::conj(p.d);
  const ComplexFloat rho2(std::norm(p.rho), 0.0);
  FP f1 = z(0) * (q * e) + c(p.rho);
  FP f2 = z(0) * (-s * two * rho2 * q * e + q2 * p.b) + z(1) * (q3 * e) + z(2) * (q * p.d) -
          z(0).pow(2) * (s * two * rb * q2 * e * e) + c(p.sigma);
  FP f3 = z(0) * (-db * e * f) + z(2) * (q2 * f) + c(p.tau);
  const ComplexFloat constant =
      p.rho * sb + p.sigma * rb + ComplexFloat(std::norm(p.tau), 0.0) + s * rho2 * rho2 + ComplexFloat(0.0, p.u);
  FP f4 = z(0) * (two * sb * q * e + two * rb * q2 * p.b - two * tb * db * e * f) + z(1) * (two * rb * q3 * e) +
          z(2) * (two * rb * q * p.d + two * tb * q2 * f) + z(3) * q4 - z(0).pow(2) * (s * two * rb * rb * q2 * e * e) +
          c(constant);
  return FloatPolyMap(n, {f1, f2, f3, f4});
}

PParamsF p_chart(std::span<const double> x, int sign) {
  if (x.size() != kPChartDimension) throw SpaceError("chart point must have 13 coordinates");
  PParamsF p;
  p.sign = sign;
  p.q = x[0];
  p.phi = x[1];
  p.psi = x[2];
  p.u = x[3];
  p.rho = {x[4], x[5]};
  p.sigma = {x[6], x[7]};
  p.tau = {x[8], x[9]};
  p.d = {x[11], x[12]};
  const ComplexFloat beta(-std::norm(p.d) / (2.0 * p.q * p.q * p.q), x[10]);
  p.b = std::polar(1.0, p.phi) * beta;
  return p;
}

std::array<double, kPChartDimension> p_chart_identity() {
  std::array<double, kPChartDimension> x{};
  x[0] = 1.0;
  return x;
}

namespace {

std::vector<Exponents> low_degree_monomials(std::size_t n, int max_degree) {
  std::vector<Exponents> out;
  Exponents e(2 * n, 0);
  out.push_back(e);
  for (std::size_t i = 0; i < n; ++i) out.push_back(lin(i));
  if (max_degree >= 2)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        Exponents f(2 * n, 0);
        f[i] += 1;
        f[j] += 1;
        out.push_back(f);
      }
  return out;
}

Eigen::VectorXd coefficient_vector(const FloatPolyMap& f, const std::vector<Exponents>& monos) {
  Eigen::VectorXd v(static_cast<Eigen::Index>(2 * f.n_out() * monos.size()));
  Eigen::Index k = 0;
  for (const auto& comp : f.components())
    for (const auto& m : monos) {
      const ComplexFloat c = comp.coefficient(m);
      v(k++) = c.real();
      v(k++) = c.imag();
    }
  return v;
}

}  // namespace

Eigen::MatrixXd p_chart_jacobian(int sign, double step) {
  const auto monos = low_degree_monomials(4, 2);
  const auto x0 = p_chart_identity();
  Eigen::MatrixXd jac(static_cast<Eigen::Index>(2 * 4 * monos.size()), kPChartDimension);
  for (int j = 0; j < kPChartDimension; ++j) {
    auto xp = x0;
    auto xm = x0;
    xp[j] += step;
    xm[j] -= step;
    const Eigen::VectorXd vp = coefficient_vector(make_p_element(p_chart(xp, sign)), monos);
    const Eigen::VectorXd vm = coefficient_vector(make_p_element(p_chart(xm, sign)), monos);
    jac.col(j) = (vp - vm) / (2.0 * step);
  }
  return jac;
}

// ---------------------------------------------------------------------------

namespace {

void check_quadric_shape(int p, int n) {
  if (n < 1 || p < 0 || p > n) throw DomainError("quadric needs n >= 1 and 0 <= p <= n");
}

int quadric_sign(int p, std::size_t j) { return static_cast<int>(j) < p ? 1 : -1; }

}  // namespace

HermitianPolynomial hermitian_quadric_form(int p, int n) {
  check_quadric_shape(p, n);
  const auto m = static_cast<std::size_t>(n);
  HP h(m);
  for (std::size_t j = 0; j < m; ++j) h += HP::abs2(m, j) * GaussianRational(quadric_sign(p, j));
  return h;
}

Hypersurface make_quadric(int p, int n) {
  const auto m = static_cast<std::size_t>(n) + 1;
  return Hypersurface(HP::real_part(m, m - 1) - extend_space(hermitian_quadric_form(p, n), m),
                      "quadric(p=" + std::to_string(p) + ",n=" + std::to_string(n) + ")");
}

SidedDomain make_quadric_domain(int p, int n, int side) {
  return SidedDomain(make_quadric(p, n), side,
                     "quadric(p=" + std::to_string(p) + ",n=" + std::to_string(n) + ",side=" + (side > 0 ? ">" : "<") +
                         ")");
}

HoloPolyMap quadric_transitive_map(int p, int n, const QuadricParams& params) {
  check_quadric_shape(p, n);
  const auto nn = static_cast<std::size_t>(n);
  if (params.a.is_zero()) throw DomainError("quadric action needs a != 0");
  if (params.b.size() != nn) throw SpaceError("translation b must have n coordinates");
  const std::size_t m = nn + 1;
  const GaussianRational a = gr(params.a);
  std::vector<HP> comps;
  HP last = zv(m, nn) * (a * a);
  GaussianRational hbb(0, params.c);
  for (std::size_t j = 0; j < nn; ++j) {
    const GaussianRational eps(quadric_sign(p, j));
    comps.push_back(zv(m, j) * a + cst(m, params.b[j]));
    last += zv(m, j) * (GaussianRational(2) * a * eps * params.b[j].conj());
    hbb += eps * gr(params.b[j].norm2());
  }
  last += cst(m, hbb);
  comps.push_back(last);
  return HoloPolyMap(m, std::move(comps));
}

std::vector<GaussianRational> quadric_base_point(int n, int side) {
  std::vector<GaussianRational> pt(static_cast<std::size_t>(n) + 1, GaussianRational(0));
  pt.back() = GaussianRational(side);
  return pt;
}

std::optional<QuadricParams> quadric_transitive_params(int p, int n, int side,
                                                       std::span<const GaussianRational> target) {
  check_quadric_shape(p, n);
  const auto nn = static_cast<std::size_t>(n);
  if (target.size() != nn + 1) throw SpaceError("target must have n+1 coordinates");
  QuadricParams out;
  Rational h(0);
  for (std::size_t j = 0; j < nn; ++j) {
    out.b.push_back(target[j]);
    h += Rational(quadric_sign(p, j)) * target[j].norm2();
  }
  const Rational a2 = Rational(side) * (target[nn].real() - h);
  if (a2.sign() <= 0) throw DomainError("target is not strictly on the requested side of the quadric");
  const auto a = sqrt_exact(a2);
  if (!a) return std::nullopt;
  out.a = *a;
  out.c = target[nn].imag();
  return out;
}

QuadricParamsF quadric_transitive_params(int p, int n, int side, std::span<const ComplexFloat> target) {
  check_quadric_shape(p, n);
  const auto nn = static_cast<std::size_t>(n);
  if (target.size() != nn + 1) throw SpaceError("target must have n+1 coordinates");
  QuadricParamsF out;
  double h = 0.0;
  for (std::size_t j = 0; j < nn; ++j) {
    out.b.push_back(target[j]);
    h += quadric_sign(p, j) * std::norm(target[j]);
  }
  const double a2 = side * (target[nn].real() - h);
  if (!(a2 > 0)) throw DomainError("target is not strictly on the requested side of the quadric");
  out.a = std::sqrt(a2);
  out.c = target[nn].imag();
  return out;
}

HermitianPolynomial tube_quadric_rho(int p, int n) {
  check_quadric_shape(p, n);
  const auto nn = static_cast<std::size_t>(n);
  HP graph(nn);
  for (std::size_t j = 0; j < nn; ++j) graph += zv(nn, j).pow(2) * GaussianRational(quadric_sign(p, j));
  return tube_rho(graph);
}

Equivalence make_tube_realisation(int p, int n) {
  check_quadric_shape(p, n);
  const auto nn = static_cast<std::size_t>(n);
  const std::size_t m = nn + 1;
  Equivalence eq;
  eq.name = "tube_realisation(p=" + std::to_string(p) + ",n=" + std::to_string(n) + ")";
  eq.source_rho = make_quadric(p, n).rho;
  eq.target_rho = tube_quadric_rho(p, n);
  std::vector<HP> comps;
  HP last = zv(m, nn);
  for (std::size_t j = 0; j < nn; ++j) {
    comps.push_back(zv(m, j));
    last += zv(m, j).pow(2) * GaussianRational(quadric_sign(p, j));
  }
  comps.push_back(last);
  eq.map.inner = HoloPolyMap(m, std::move(comps));
  eq.map.scale.assign(nn, RadicalScalar::power(Rational(2), Rational(1, 2)));
  eq.map.scale.push_back(RadicalScalar());
  return eq;
}

// ---------------------------------------------------------------------------

HermitianPolynomial cayley_graph() {
  const std::size_t n = 2;
  return zv(n, 0) * zv(n, 1) + zv(n, 0).pow(3);
}

Hypersurface make_cayley_surface() { return Hypersurface(tube_rho(cayley_graph()), "cayley"); }

Equivalence make_cayley_equivalence() {
  const std::size_t n = 3;
  const HP z1 = zv(n, 0), z2 = zv(n, 1), z3 = zv(n, 2);
  const HP shear = z2 + z1.pow(2) * gr(Rational(3, 2));
  Equivalence eq;
  eq.name = "cayley";
  eq.source_rho = make_cayley_surface().rho;
  eq.target_rho = HP::real_part(n, 2) - HP::abs2(n, 0) + HP::abs2(n, 1);
  eq.map.inner = HoloPolyMap(
      n, {z1 + shear, z1 - shear, z3 * GaussianRational(4) - z1 * z2 * GaussianRational(2) - z1.pow(3)});
  const RadicalScalar inv_root2 = RadicalScalar::power(Rational(2), Rational(-1, 2));
  eq.map.scale = {inv_root2, inv_root2, RadicalScalar()};
  return eq;
}

FloatPolynomial sigma_graph(double sigma) {
  if (!(sigma >= 1.0 && sigma < kSigmaUpper)) throw DomainError("sigma must lie in [1, 17 + 12 sqrt 2)");
  using FP = FloatPolynomial;
  const std::size_t n = 7;
  auto x = [&](std::size_t i) { return FP::z(n, i - 1); };
  auto k = [](double v) { return ComplexFloat(v, 0.0); };
  const double r1 = std::sqrt(2.0 * (1.0 + sigma));
  const double r2 = std::sqrt(3.0 * sigma);
  const double r3 = std::sqrt((-sigma * sigma + 34.0 * sigma - 1.0) / (3.0 * sigma));
  FP f = x(1).pow(2) + x(2).pow(2) + x(3).pow(2) + x(4) * x(5) + x(6) * x(7);
  f += x(1) * x(4) * x(6) * k(2.0 * r1);
  f += x(2) * x(6).pow(2) * k(2.0 * r2);
  f += x(2) * x(4).pow(2) * k((1.0 + sigma) / r2);
  f += x(3) * x(4).pow(2) * k(r3);
  f += (x(4).pow(2) + x(6).pow(2)) * (x(4).pow(2) + x(6).pow(2) * k(sigma));
  return f;
}

}  // namespace homdom
