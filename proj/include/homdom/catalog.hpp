#pragma once

#include <array>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "homdom/geometry.hpp"
#include "homdom/maps.hpp"
#include "homdom/random.hpp"

namespace homdom {

// ---------------------------------------------------------------------------
// Quartic graphs x4 = x1 x2 + x3^2 + x1^2 x3 + alpha x1^4 and their tubes.

/// The graph function in the three variables x1, x2, x3.
HermitianPolynomial gamma_graph(const Rational& alpha);
/// The tube hypersurface Re z4 = graph(Re z1, Re z2, Re z3).
Hypersurface make_gamma(const Rational& alpha);
/// side = +1 is the region above the graph, -1 below.
SidedDomain make_omega(const Rational& alpha, int side);

enum class GeneratorKind { phi, psi, mu, nu };

std::string to_string(GeneratorKind kind);
GeneratorKind parse_generator_kind(const std::string& text);

namespace detail {

template <class R>
AffineMap<R> affine_from_rows(const std::array<std::array<R, 4>, 4>& rows, const std::array<R, 4>& shift) {
  AffineMap<R> f{Matrix<R>(4, 4), Vector<R>(4)};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) f.matrix(i, j) = rows[i][j];
    f.translation(i) = shift[i];
  }
  return f;
}

}  // namespace detail

/// Affine symmetries of the quartic graph. Works over Rational and double.
/// phi needs a nonzero parameter (DomainError otherwise).
template <class R>
AffineMap<R> make_generator(GeneratorKind kind, const R& alpha, const R& p) {
  const R zero(0);
  const R one(1);
  switch (kind) {
    case GeneratorKind::phi: {
      if (p == zero) throw DomainError("phi needs a nonzero scale");
      const R q2 = p * p;
      return detail::affine_from_rows<R>(
          {{{p, zero, zero, zero}, {zero, q2 * p, zero, zero}, {zero, zero, q2, zero}, {zero, zero, zero, q2 * q2}}},
          {zero, zero, zero, zero});
    }
    case GeneratorKind::psi: {
      const R a = alpha;
      const R k = R(4) * a - one;  // 4 alpha - 1
      const R r = p;
      const R r2 = r * r;
      const R r3 = r2 * r;
      return detail::affine_from_rows<R>(
          {{{one, zero, zero, zero},
            {-R(4) * a * k * r2, one, R(2) * k * r, zero},
            {-R(4) * a * r, zero, one, zero},
            {-(R(4) / R(3)) * a * k * r3, r, k * r2, one}}},
          {r, -(R(4) / R(3)) * a * k * r3, -R(2) * a * r2, -(one / R(3)) * a * k * r3 * r});
    }
    case GeneratorKind::mu:
      return detail::affine_from_rows<R>(
          {{{one, zero, zero, zero}, {zero, one, zero, zero}, {zero, zero, one, zero}, {p, zero, zero, one}}},
          {zero, p, zero, zero});
    case GeneratorKind::nu:
      return detail::affine_from_rows<R>(
          {{{one, zero, zero, zero}, {-p, one, zero, zero}, {zero, zero, one, zero}, {zero, zero, R(2) * p, one}}},
          {zero, zero, p, p * p});
  }
  throw DomainError("unknown generator");
}

template <class R>
struct TransitiveParams {
  R q, r, s, t;
};

/// phi_q o mu_s o nu_t o psi_r.
template <class R>
AffineMap<R> omega_transitive_map(const R& alpha, const TransitiveParams<R>& p) {
  auto f = compose(make_generator(GeneratorKind::nu, alpha, p.t), make_generator(GeneratorKind::psi, alpha, p.r));
  f = compose(make_generator(GeneratorKind::mu, alpha, p.s), f);
  return compose(make_generator(GeneratorKind::phi, alpha, p.q), f);
}

/// Parameters moving (0,0,0,1) to `target` above the graph. Returns nullopt
/// when the scale is not a rational fourth root; throws DomainError when the
/// target is not strictly above the graph.
std::optional<TransitiveParams<Rational>> transitive_params_omega(const Rational& alpha,
                                                                  std::span<const Rational> target);
TransitiveParams<double> transitive_params_omega(double alpha, std::span<const double> target);

// ---------------------------------------------------------------------------
// Model surfaces Re z4 = z1 zb2 + z2 zb1 + |z3|^2 +- |z1|^4 and the flat one.

HermitianPolynomial m_rho(int sign);
Hypersurface make_m(int sign);
SidedDomain make_d(int sign, int side);
/// Re z4 = |z1|^2 + |z2|^2 - |z3|^2.
Hypersurface make_d0();

/// A map certified as diag(scale) o inner from the source to the target
/// defining function.
struct Equivalence {
  std::string name;
  HermitianPolynomial source_rho;
  HermitianPolynomial target_rho;
  RescaledMap map;
};

RescaledCertificate certify(const Equivalence& eq, double tolerance = 1e-9);

/// Polynomial normalization of the quartic tube; target M_+ for alpha > 1/12,
/// M_- for alpha < 1/12 and the flat model at alpha = 1/12.
Equivalence make_normalizer(const Rational& alpha);
/// Sign of the model reached by make_normalizer (0 for the flat model).
int normalizer_target_sign(const Rational& alpha);

// ---------------------------------------------------------------------------
// The 13-dimensional automorphism group of M_+ and M_-.

struct PParams {
  Rational q{1};
  UnimodularPhase phi;
  UnimodularPhase psi;
  Rational u{0};
  GaussianRational rho, sigma, tau, b, d;
  int sign = 1;

  static PParams identity(int sign) {
    PParams p;
    p.sign = sign;
    return p;
  }
  /// |d|^2 + 2 q^3 Re(e^{i phi} conj b); zero when the constraint holds.
  Rational constraint_defect() const;
  /// Throws ConstraintError on q <= 0, Re(e^{i phi} conj b) > 0 or a nonzero defect.
  void validate() const;
  bool translation_free() const { return rho.is_zero() && sigma.is_zero() && tau.is_zero() && u.is_zero(); }

  friend bool operator==(const PParams&, const PParams&) = default;
};

std::string to_string(const PParams& p);

HoloPolyMap make_p_element(const PParams& p);
/// Same formulas without validating the constraint (negative controls).
HoloPolyMap make_p_element_unchecked(const PParams& p);
/// Constant term read as tau^2 +- rho^4 instead of |tau|^2 +- |rho|^4.
HoloPolyMap make_p_element_literal(const PParams& p);

/// Parameters of a map of the group form; throws ClosureViolation when the
/// map is not regenerated exactly by the recovered parameters.
PParams recover_p_params(const HoloPolyMap& f, int sign);
/// a o b.
PParams p_compose(const PParams& a, const PParams& b);
PParams p_inverse(const PParams& a);

/// Linear part at the origin divided by q^2 (translation-free parameters).
MatrixQi make_isotropy_matrix(const PParams& p);
/// Matrix of z1 zb2 + z2 zb1 + |z3|^2.
MatrixQi pairing_form();

/// Random exact parameters satisfying the constraint.
PParams random_p_params(Rng& rng, int sign);

/// Floating parameters with real angles.
struct PParamsF {
  double q = 1.0;
  double phi = 0.0;
  double psi = 0.0;
  double u = 0.0;
  ComplexFloat rho, sigma, tau, b, d;
  int sign = 1;
};

FloatPolyMap make_p_element(const PParamsF& p);

/// Chart (q, phi, psi, u, Re/Im rho, sigma, tau, Im beta, Re/Im d) with
/// b = e^{i phi} beta and Re beta fixed by the constraint.
constexpr int kPChartDimension = 13;
PParamsF p_chart(std::span<const double> x, int sign);
std::array<double, kPChartDimension> p_chart_identity();
/// Central-difference Jacobian of chart -> map coefficients (degree <= 2).
Eigen::MatrixXd p_chart_jacobian(int sign, double step = 1e-6);

// ---------------------------------------------------------------------------
// Quadrics Re z_{n+1} = H_{p,n}(z, zbar).

/// H_{p,n}(z, zbar) in n variables.
HermitianPolynomial hermitian_quadric_form(int p, int n);
Hypersurface make_quadric(int p, int n);
SidedDomain make_quadric_domain(int p, int n, int side);

struct QuadricParams {
  Rational a{1};
  std::vector<GaussianRational> b;
  Rational c{0};
};

struct QuadricParamsF {
  double a = 1.0;
  std::vector<ComplexFloat> b;
  double c = 0.0;
};

/// z -> a z + b, w -> 2a H(z, conj b) + a^2 w + H(b, conj b) + i c.
HoloPolyMap quadric_transitive_map(int p, int n, const QuadricParams& params);
/// Base point (0, ..., 0, side).
std::vector<GaussianRational> quadric_base_point(int n, int side);
/// Parameters moving the base point to target; nullopt when a is irrational.
/// Throws DomainError if target is not strictly on the given side.
std::optional<QuadricParams> quadric_transitive_params(int p, int n, int side, std::span<const GaussianRational> target);
QuadricParamsF quadric_transitive_params(int p, int n, int side, std::span<const ComplexFloat> target);

/// Tube over x_{n+1} = H_{p,n}(x, x).
HermitianPolynomial tube_quadric_rho(int p, int n);
/// z -> sqrt2 z, w -> w + H(z, z), from the quadric to its tube form.
Equivalence make_tube_realisation(int p, int n);

// ---------------------------------------------------------------------------
// Cubic graph x3 = x1 x2 + x1^3 and the quartic seven-variable family.

HermitianPolynomial cayley_graph();
Hypersurface make_cayley_surface();
/// Equivalence from the cubic tube to Re z3 = |z1|^2 - |z2|^2.
Equivalence make_cayley_equivalence();

/// 17 + 12 sqrt 2.
inline constexpr double kSigmaUpper = 33.970562748477143;
/// Graph function of the seven-variable family; throws DomainError when
/// sigma is outside [1, 17 + 12 sqrt 2).
FloatPolynomial sigma_graph(double sigma);

// ---------------------------------------------------------------------------
// String identifiers such as gamma(alpha=1/12), quadric(p=2,n=3,side=>).

struct RegistryId {
  std::string name;
  std::map<std::string, std::string> args;
  std::string str() const;
};

/// Throws ParseError on malformed text.
RegistryId parse_registry_id(const std::string& text);

/// Resolved object: a domain, a surface, an equivalence or a group.
struct CatalogObject {
  std::string id;
  std::string summary;
  std::optional<HermitianPolynomial> rho;
  std::optional<SidedDomain> domain;
  std::optional<Equivalence> equivalence;
  std::optional<FloatPolynomial> float_graph;
  std::string detail;  ///< printable definition
};

/// Throws ParseError for unknown identifiers or bad arguments.
CatalogObject resolve(const std::string& id);
std::string describe(const std::string& id);

struct RegistryListing {
  std::string example_id;
  std::string summary;
};
std::vector<RegistryListing> list_registry();

/// Affine complex line base + t direction.
struct ComplexLine {
  std::vector<GaussianRational> base;
  std::vector<GaussianRational> direction;
};

/// The line a non-hyperbolic domain is known to contain: for the quartic
/// models {z1 = z3 = 0, z4 = +-1}; for quadric domains the line through
/// (0, ..., 0, -1) along z1 on the lower side and through (0, ..., 0, 1)
/// along z_n on the upper side when p < n. nullopt when none is stored.
std::optional<ComplexLine> stated_line(const std::string& id);

/// Real vector -> exact complex point.
std::vector<GaussianRational> to_complex_point(std::span<const Rational> x);

}  // namespace homdom
