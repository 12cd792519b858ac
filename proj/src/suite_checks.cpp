#include <algorithm>
#include <chrono>
#include <cmath>
#include <set>
#include <sstream>

#include "homdom/catalog.hpp"
#include "homdom/chern_moser.hpp"
#include "homdom/lie.hpp"
#include "homdom/poly_io.hpp"
#include "homdom/suite.hpp"

namespace homdom {

namespace {

using nlohmann::json;

json jq(const Rational& r) { return r.fraction_str(); }
json jq(const GaussianRational& w) { return json::array({w.real().fraction_str(), w.imag().fraction_str()}); }
json jq(const ComplexFloat& w) { return json::array({w.real(), w.imag()}); }

json jq(const Inertia& s) { return json::array({s.positive, s.negative, s.zero}); }

template <class T>
json jq_list(const std::vector<T>& xs) {
  json out = json::array();
  for (const auto& x : xs) out.push_back(jq(x));
  return out;
}

// Tally of sub-assertions; a check holds when every one is accepted.
struct Outcome {
  std::size_t accepted = 0;
  std::size_t total = 0;
  json details = json::object();

  bool record(bool ok) {
    ++total;
    if (ok) ++accepted;
    return ok;
  }
};

class Params {
 public:
  explicit Params(const CheckSpec& spec) : spec_(spec) {}

  bool has(const std::string& key) const {
    if (!spec_.params.count(key)) return false;
    used_.insert(key);
    return true;
  }
  bool has_prefix(const std::string& prefix) const {
    for (const auto& [k, v] : spec_.params)
      if (k.rfind(prefix, 0) == 0) return true;
    return false;
  }
  std::string str(const std::string& key) const {
    auto it = spec_.params.find(key);
    if (it == spec_.params.end()) throw ConfigError("check '" + spec_.id + "' needs parameter '" + key + "'");
    used_.insert(key);
    return it->second;
  }
  std::string str(const std::string& key, const std::string& fallback) const { return has(key) ? str(key) : fallback; }
  int integer(const std::string& key, int fallback) const {
    if (!has(key)) return fallback;
    try {
      return std::stoi(str(key));
    } catch (const std::exception&) {
      throw ConfigError("parameter '" + key + "' must be an integer");
    }
  }
  double real(const std::string& key, double fallback) const {
    if (!has(key)) return fallback;
    try {
      return std::stod(str(key));
    } catch (const std::exception&) {
      throw ConfigError("parameter '" + key + "' must be a number");
    }
  }
  bool flag(const std::string& key, bool fallback) const {
    if (!has(key)) return fallback;
    const std::string v = str(key);
    if (v == "true") return true;
    if (v == "false") return false;
    throw ConfigError("parameter '" + key + "' must be true or false");
  }
  void ensure_all_used() const {
    for (const auto& [k, v] : spec_.params)
      if (!used_.count(k)) throw ConfigError("check '" + spec_.id + "' has unused parameter '" + k + "'");
  }

 private:
  const CheckSpec& spec_;
  mutable std::set<std::string> used_;
};

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(0, item.find_first_not_of(' '));
    item.erase(item.find_last_not_of(' ') + 1);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

Inertia parse_signature(const std::string& text) {
  const auto parts = split_list(text);
  if (parts.size() != 2) throw ConfigError("signature must be 'p,q'");
  return Inertia{std::stoi(parts[0]), std::stoi(parts[1]), 0};
}

int sign_of_group(const RegistryId& id) {
  if (id.name == "P_plus" || id.name == "M_plus") return 1;
  if (id.name == "P_minus" || id.name == "M_minus") return -1;
  throw ConfigError("target '" + id.str() + "' is not one of the model groups");
}

bool close_to(const ComplexFloat& a, double b, double tol) { return std::abs(a - b) <= tol * std::max(1.0, std::abs(b)); }

FloatPolyMap lift_affine_float(const AffineMapF& f) {
  const auto n = static_cast<std::size_t>(f.dimension());
  std::vector<FloatPolynomial> comps;
  for (std::size_t i = 0; i < n; ++i) {
    FloatPolynomial c = FloatPolynomial::constant(n, f.translation(static_cast<Eigen::Index>(i)));
    for (std::size_t j = 0; j < n; ++j) {
      const double a = f.matrix(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
      if (a != 0.0) c += FloatPolynomial::z(n, j) * ComplexFloat(a);
    }
    comps.push_back(c);
  }
  return FloatPolyMap(n, std::move(comps));
}

bool positive_real(const GaussianRational& w) { return w.is_real() && w.real().sign() > 0; }

PParams translation_free(PParams p) {
  p.u = 0;
  p.rho = p.sigma = p.tau = GaussianRational(0);
  return p;
}

// ---------------------------------------------------------------------------
// invariance

Outcome gamma_invariance(const CheckSpec& spec, const Params& P, Rng& rng, const RegistryId& id) {
  Outcome o;
  const Rational alpha = Rational::parse(id.args.at("alpha"));
  const HermitianPolynomial rho = make_gamma(alpha).rho;
  const FloatPolynomial rho_f = convert<ComplexFloat>(rho);
  const int samples = P.integer("samples", 20);
  const double tol = P.real("tolerance", 1e-9);
  bool all_exact = true;
  json per = json::object();
  for (const auto& name : split_list(P.str("generators", "phi,psi,mu,nu"))) {
    const GeneratorKind kind = parse_generator_kind(name);
    json g = {{"samples", samples}, {"accepted", 0}};
    std::size_t ok_count = 0;
    double worst = 0.0;
    for (int s = 0; s < samples; ++s) {
      const Rational p = random_nonzero_rational(rng, -3, 3);
      const Rational expected = kind == GeneratorKind::phi ? p.pow(4) : Rational(1);
      bool ok = true;
      if (spec.exact_path()) {
        const auto cert = invariance_certificate(rho, lift_affine(make_generator<Rational>(kind, alpha, p)));
        ok = ok && cert.exact && cert.factor == GaussianRational(expected);
        all_exact = all_exact && cert.exact;
        if (s == 0) {
          g["first_parameter"] = jq(p);
          g["first_factor"] = jq(cert.factor);
          g["residual_terms"] = cert.residual.term_count();
        }
      }
      if (spec.float_path()) {
        const auto f = lift_affine_float(make_generator<double>(kind, alpha.to_double(), p.to_double()));
        const auto cert = invariance_certificate(rho_f, f, tol);
        worst = std::max(worst, cert.residual_norm);
        ok = ok && cert.holds && close_to(cert.factor, expected.to_double(), tol);
      }
      if (o.record(ok)) ++ok_count;
    }
    g["accepted"] = ok_count;
    if (spec.float_path()) g["max_float_residual"] = worst;
    per[name] = g;
  }
  o.details["generators"] = per;
  o.details["exact"] = spec.exact_path() && all_exact;
  o.details["factor"] = "q^4 for phi, 1 otherwise";
  return o;
}

PParams explicit_p_params(const Params& P, int sign) {
  PParams p = PParams::identity(sign);
  if (P.has("p.q")) p.q = Rational::parse(P.str("p.q"));
  if (P.has("p.phi")) p.phi = phase_from_parameter(Rational::parse(P.str("p.phi")));
  if (P.has("p.psi")) p.psi = phase_from_parameter(Rational::parse(P.str("p.psi")));
  if (P.has("p.u")) p.u = Rational::parse(P.str("p.u"));
  if (P.has("p.rho")) p.rho = parse_gaussian(P.str("p.rho"));
  if (P.has("p.sigma")) p.sigma = parse_gaussian(P.str("p.sigma"));
  if (P.has("p.tau")) p.tau = parse_gaussian(P.str("p.tau"));
  if (P.has("p.b")) p.b = parse_gaussian(P.str("p.b"));
  if (P.has("p.d")) p.d = parse_gaussian(P.str("p.d"));
  return p;
}

Outcome p_invariance(const CheckSpec& spec, const Params& P, Rng& rng, const RegistryId& id) {
  Outcome o;
  const int sign = sign_of_group(id);
  const HermitianPolynomial rho = m_rho(sign);
  const FloatPolynomial rho_f = convert<ComplexFloat>(rho);
  const double tol = P.real("tolerance", 1e-9);

  if (P.has_prefix("p.")) {
    const PParams p = explicit_p_params(P, sign);
    const auto cert = invariance_certificate(rho, make_p_element_unchecked(p));
    o.record(cert.exact && cert.factor == GaussianRational(p.q.pow(4)));
    o.details["params"] = to_string(p);
    o.details["constraint_defect"] = jq(p.constraint_defect());
    o.details["factor"] = jq(cert.factor);
    o.details["exact"] = cert.exact;
    o.details["residual_terms"] = cert.residual.term_count();
    return o;
  }

  const std::string control = P.str("control", "none");
  if (control != "none" && control != "perturb" && control != "literal")
    throw ConfigError("control must be none, perturb or literal");
  const int samples = P.integer("samples", 50);
  std::size_t skipped = 0;
  std::size_t exact_count = 0;
  double worst = 0.0;
  for (int s = 0; s < samples;) {
    const PParams p = random_p_params(rng, sign);
    HoloPolyMap f;
    if (control == "none") {
      f = make_p_element(p);
    } else if (control == "perturb") {
      PParams bad = p;
      bad.d = bad.d + GaussianRational(1);
      if (bad.constraint_defect().is_zero()) {
        ++skipped;
        continue;
      }
      f = make_p_element_unchecked(bad);
    } else {
      // only Re of the z4 constant enters rho; equal real parts are no control
      f = make_p_element_literal(p);
      if (f[3].constant_term().real() == make_p_element(p)[3].constant_term().real()) {
        ++skipped;
        continue;
      }
    }
    ++s;
    bool ok = true;
    if (spec.exact_path()) {
      const auto cert = invariance_certificate(rho, f);
      ok = cert.exact && cert.factor == GaussianRational(p.q.pow(4));
      if (cert.exact) ++exact_count;
      if (s == 1) {
        o.details["first_params"] = to_string(p);
        o.details["factor"] = jq(cert.factor);
        o.details["residual_terms"] = cert.residual.term_count();
      }
    }
    if (spec.float_path()) {
      if (control == "none") {
        // independent floating draw through the real chart
        std::array<double, kPChartDimension> x{};
        x[0] = random_double(rng, 0.5, 2.0);
        for (int k = 1; k < kPChartDimension; ++k) x[k] = random_double(rng, -1.0, 1.0);
        const PParamsF pf = p_chart(x, sign);
        const auto cert = invariance_certificate(rho_f, make_p_element(pf), tol);
        worst = std::max(worst, cert.residual_norm);
        ok = ok && cert.holds && close_to(cert.factor, std::pow(pf.q, 4), tol);
      } else {
        const auto cert = invariance_certificate(rho_f, convert<ComplexFloat>(f), tol);
        worst = std::max(worst, cert.residual_norm);
        ok = ok && cert.holds;
      }
    }
    o.record(ok);
  }
  o.details["control"] = control;
  o.details["exact"] = spec.exact_path() && exact_count == static_cast<std::size_t>(samples);
  o.details["exact_count"] = exact_count;
  o.details["skipped_draws"] = skipped;
  if (spec.float_path()) o.details["max_float_residual"] = worst;
  return o;
}

Outcome equivalence_invariance(const CheckSpec& spec, const Params& P, const CatalogObject& obj) {
  Outcome o;
  const Equivalence& eq = *obj.equivalence;
  const double tol = P.real("tolerance", 1e-9);
  const RescaledCertificate cert = certify(eq, tol);
  bool ok = true;
  if (spec.exact_path()) {
    ok = cert.exact.exact && positive_real(cert.exact.factor);
    if (P.has("factor")) ok = ok && cert.exact.factor == parse_gaussian(P.str("factor"));
  }
  if (spec.float_path()) {
    const ComplexFloat c = cert.floating.factor;
    ok = ok && cert.floating.holds && c.real() > 0 && std::abs(c.imag()) <= tol;
    o.details["float_factor"] = jq(c);
    o.details["max_float_residual"] = cert.floating.residual_norm;
  }
  o.record(ok);
  o.details["map"] = eq.name;
  o.details["factor"] = jq(cert.exact.factor);
  o.details["exact"] = cert.exact.exact;
  o.details["residual_terms"] = cert.exact.residual.term_count();
  json scale = json::array();
  for (const auto& s : eq.map.scale) scale.push_back(s.str());
  o.details["scale"] = scale;
  return o;
}

Outcome quadric_invariance(const CheckSpec& spec, const Params& P, Rng& rng, const RegistryId& id) {
  Outcome o;
  const int p = std::stoi(id.args.at("p"));
  const int n = std::stoi(id.args.at("n"));
  const HermitianPolynomial rho = make_quadric(p, n).rho;
  const FloatPolynomial rho_f = convert<ComplexFloat>(rho);
  const double tol = P.real("tolerance", 1e-9);
  const int samples = P.integer("samples", 20);
  std::size_t exact_count = 0;
  double worst = 0.0;
  for (int s = 0; s < samples; ++s) {
    QuadricParams qp;
    qp.a = random_positive_rational(rng, 3);
    for (int j = 0; j < n; ++j) qp.b.push_back(random_gaussian(rng, -2, 2));
    qp.c = random_rational(rng, -3, 3);
    const HoloPolyMap f = quadric_transitive_map(p, n, qp);
    bool ok = true;
    if (spec.exact_path()) {
      const auto cert = invariance_certificate(rho, f);
      ok = cert.exact && cert.factor == GaussianRational(qp.a * qp.a);
      if (cert.exact) ++exact_count;
      if (s == 0) {
        o.details["first_a"] = jq(qp.a);
        o.details["factor"] = jq(cert.factor);
      }
    }
    if (spec.float_path()) {
      const auto cert = invariance_certificate(rho_f, convert<ComplexFloat>(f), tol);
      worst = std::max(worst, cert.residual_norm);
      ok = ok && cert.holds && close_to(cert.factor, (qp.a * qp.a).to_double(), tol);
    }
    o.record(ok);
  }
  o.details["exact"] = spec.exact_path() && exact_count == static_cast<std::size_t>(samples);
  if (spec.float_path()) o.details["max_float_residual"] = worst;
  return o;
}

Outcome literal_invariance(const CheckSpec& spec, const Params& P, const CatalogObject& obj) {
  Outcome o;
  if (!obj.rho) throw ConfigError("target '" + obj.id + "' has no defining polynomial");
  const HermitianPolynomial& rho = *obj.rho;
  const std::size_t n = rho.nvars();
  HoloPolyMap f;
  if (P.has("map.z1")) {
    std::vector<HermitianPolynomial> comps;
    for (std::size_t k = 1; k <= n; ++k) comps.push_back(parse_polynomial(P.str("map.z" + std::to_string(k)), n));
    f = HoloPolyMap(n, std::move(comps));
  } else {
    AffineMapR a{MatrixQ(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n)),
                 VectorQ::Constant(static_cast<Eigen::Index>(n), Rational(0))};
    for (std::size_t i = 0; i < n; ++i) {
      const auto row = parse_rational_list(P.str("affine.row" + std::to_string(i + 1)));
      if (row.size() != n) throw ConfigError("affine row has the wrong length");
      for (std::size_t j = 0; j < n; ++j) a.matrix(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = row[j];
    }
    if (P.has("affine.translation")) {
      const auto t = parse_rational_list(P.str("affine.translation"));
      if (t.size() != n) throw ConfigError("affine translation has the wrong length");
      for (std::size_t i = 0; i < n; ++i) a.translation(static_cast<Eigen::Index>(i)) = t[i];
    }
    f = lift_affine(a);
  }
  const double tol = P.real("tolerance", 1e-9);
  bool ok = true;
  const auto cert = invariance_certificate(rho, f);
  if (spec.exact_path()) {
    ok = cert.exact && positive_real(cert.factor);
    if (P.has("factor")) ok = ok && cert.factor == parse_gaussian(P.str("factor"));
  }
  if (spec.float_path()) {
    const auto fc = invariance_certificate(convert<ComplexFloat>(rho), convert<ComplexFloat>(f), tol);
    ok = ok && fc.holds && fc.factor.real() > 0;
    o.details["max_float_residual"] = fc.residual_norm;
  }
  o.record(ok);
  o.details["factor"] = jq(cert.factor);
  o.details["exact"] = cert.exact;
  o.details["residual_terms"] = cert.residual.term_count();
  return o;
}

Outcome invariance(const CheckSpec& spec, const Params& P, Rng& rng) {
  const RegistryId id = parse_registry_id(spec.target);
  const CatalogObject obj = resolve(spec.target);
  if (P.has_prefix("map.") || P.has_prefix("affine.")) return literal_invariance(spec, P, obj);
  if (id.name == "gamma") return gamma_invariance(spec, P, rng, id);
  if (id.name == "P_plus" || id.name == "P_minus") return p_invariance(spec, P, rng, id);
  if (obj.equivalence) return equivalence_invariance(spec, P, obj);
  if (id.name == "quadric") return quadric_invariance(spec, P, rng, id);
  throw ConfigError("no invariance check for target '" + spec.target + "'");
}

// ---------------------------------------------------------------------------
// transitivity

std::vector<Rational> to_std(const VectorQ& v) { return {v.data(), v.data() + v.size()}; }

Outcome omega_transitivity(const CheckSpec& spec, const Params& P, Rng& rng, const RegistryId& id,
                           const CatalogObject& obj) {
  Outcome o;
  const Rational alpha = Rational::parse(id.args.at("alpha"));
  if (obj.domain->side != 1) throw ConfigError("transitivity is solved on the upper side only");
  const SidedDomain& dom = *obj.domain;
  VectorQ base = VectorQ::Constant(4, Rational(0));
  base(3) = 1;

  if (spec.exact_path()) {
    const int samples = P.integer("exact_samples", 100);
    std::size_t ok_count = 0;
    for (int s = 0; s < samples; ++s) {
      const TransitiveParams<Rational> tp{random_positive_rational(rng, 3), random_rational(rng, -2, 2),
                                          random_rational(rng, -2, 2), random_rational(rng, -2, 2)};
      const auto target = to_std(omega_transitive_map(alpha, tp).apply(base));
      bool ok = side_of(dom, to_complex_point(target)) == Membership::inside;
      const auto sol = transitive_params_omega(alpha, target);
      ok = ok && sol && to_std(omega_transitive_map(alpha, *sol).apply(base)) == target;
      if (o.record(ok)) ++ok_count;
    }
    o.details["exact_samples"] = samples;
    o.details["exact_accepted"] = ok_count;
  }
  if (spec.float_path()) {
    const int samples = P.integer("float_samples", 100);
    const double tol = P.real("tolerance", 1e-9);
    const FloatPolynomial graph = convert<ComplexFloat>(gamma_graph(alpha));
    const double a = alpha.to_double();
    Vector<double> base_f = Vector<double>::Zero(4);
    base_f(3) = 1.0;
    double worst = 0.0;
    for (int s = 0; s < samples; ++s) {
      std::vector<ComplexFloat> x;
      for (int k = 0; k < 3; ++k) x.emplace_back(random_double(rng, -2.0, 2.0), 0.0);
      const double top = evaluate<ComplexFloat>(graph, x).real() + random_double(rng, 0.05, 3.0);
      const std::vector<double> target{x[0].real(), x[1].real(), x[2].real(), top};
      const auto sol = transitive_params_omega(a, target);
      const Vector<double> img = omega_transitive_map(a, sol).apply(base_f);
      double err = 0.0;
      for (int k = 0; k < 4; ++k) err = std::max(err, std::abs(img(k) - target[k]));
      worst = std::max(worst, err);
      o.record(err <= tol);
    }
    o.details["float_samples"] = samples;
    o.details["max_float_error"] = worst;
  }
  if (P.has("regression_target")) {
    const auto target = parse_rational_list(P.str("regression_target"));
    const auto expected = parse_rational_list(P.str("regression_params"));
    if (target.size() != 4 || expected.size() != 4) throw ConfigError("regression data needs four entries");
    const auto sol = transitive_params_omega(alpha, target);
    bool ok = sol.has_value();
    if (sol) {
      ok = sol->q == expected[0] && sol->r == expected[1] && sol->s == expected[2] && sol->t == expected[3] &&
           to_std(omega_transitive_map(alpha, *sol).apply(base)) == target;
      o.details["regression_params"] = json::array({jq(sol->q), jq(sol->r), jq(sol->s), jq(sol->t)});
    }
    o.details["regression_ok"] = o.record(ok);
  }
  return o;
}

Outcome quadric_transitivity(const CheckSpec& spec, const Params& P, Rng& rng, const RegistryId& id,
                             const CatalogObject& obj) {
  Outcome o;
  const int p = std::stoi(id.args.at("p"));
  const int n = std::stoi(id.args.at("n"));
  const int side = obj.domain->side;
  const auto base = quadric_base_point(n, side);
  if (spec.exact_path()) {
    const int samples = P.integer("exact_samples", 50);
    for (int s = 0; s < samples; ++s) {
      QuadricParams qp;
      qp.a = random_positive_rational(rng, 3);
      for (int j = 0; j < n; ++j) qp.b.push_back(random_gaussian(rng, -2, 2));
      qp.c = random_rational(rng, -3, 3);
      const auto target = quadric_transitive_map(p, n, qp).apply(base);
      bool ok = side_of(*obj.domain, target) == Membership::inside;
      const auto sol = quadric_transitive_params(p, n, side, target);
      ok = ok && sol && quadric_transitive_map(p, n, *sol).apply(base) == target;
      o.record(ok);
    }
    o.details["exact_samples"] = samples;
  }
  if (spec.float_path()) {
    const int samples = P.integer("float_samples", 50);
    const double tol = P.real("tolerance", 1e-9);
    const FloatPolynomial h = convert<ComplexFloat>(hermitian_quadric_form(p, n));
    double worst = 0.0;
    for (int s = 0; s < samples; ++s) {
      std::vector<ComplexFloat> z;
      for (int j = 0; j < n; ++j) z.emplace_back(random_double(rng, -2.0, 2.0), random_double(rng, -2.0, 2.0));
      const double hz = evaluate<ComplexFloat>(h, z).real();
      std::vector<ComplexFloat> target = z;
      target.emplace_back(hz + side * random_double(rng, 0.05, 3.0), random_double(rng, -3.0, 3.0));
      const QuadricParamsF sol = quadric_transitive_params(p, n, side, std::span<const ComplexFloat>(target));
      // image of the base point: (b, a^2 side + H(b, conj b) + i c)
      double err = 0.0;
      for (int j = 0; j < n; ++j) err = std::max(err, std::abs(sol.b[j] - target[j]));
      const ComplexFloat w(sol.a * sol.a * side + evaluate<ComplexFloat>(h, sol.b).real(), sol.c);
      err = std::max(err, std::abs(w - target.back()));
      worst = std::max(worst, err);
      o.record(err <= tol);
    }
    o.details["float_samples"] = samples;
    o.details["max_float_error"] = worst;
  }
  return o;
}

Outcome transitivity(const CheckSpec& spec, const Params& P, Rng& rng) {
  const RegistryId id = parse_registry_id(spec.target);
  const CatalogObject obj = resolve(spec.target);
  if (id.name == "omega") return omega_transitivity(spec, P, rng, id, obj);
  if (id.name == "quadric") return quadric_transitivity(spec, P, rng, id, obj);
  throw ConfigError("no transitivity check for target '" + spec.target + "'");
}

// ---------------------------------------------------------------------------
// levi

Outcome model_levi(const CheckSpec& spec, const Params& P, Rng& rng, const RegistryId& id) {
  Outcome o;
  const Hypersurface surface = make_m(sign_of_group(id));
  const Inertia expected = parse_signature(P.str("signature", "2,1"));
  const double margin = P.real("margin", 1e-9);
  double min_margin = 1.0;

  auto test_point = [&](const std::vector<GaussianRational>& pt) {
    bool ok = true;
    if (spec.exact_path()) ok = levi_form_exact(surface, pt).signature == expected;
    if (spec.float_path()) {
      std::vector<ComplexFloat> ptf;
      for (const auto& c : pt) ptf.push_back(to_complex(c));
      const LeviData d = levi_form(surface, ptf);
      min_margin = std::min(min_margin, d.spectrum.margin);
      ok = ok && d.signature() == expected && d.spectrum.margin > margin;
    }
    return o.record(ok);
  };

  o.details["origin_ok"] = test_point(std::vector<GaussianRational>(4, GaussianRational(0)));
  if (P.has("point")) {
    const auto pt = parse_gaussian_list(P.str("point"));
    if (pt.size() != 4) throw ConfigError("point needs four coordinates");
    if (!evaluate<GaussianRational>(surface.rho, pt).is_zero()) throw ConfigError("point is not on the surface");
    o.details["point_ok"] = test_point(pt);
  }
  const int samples = P.integer("samples", 50);
  for (int s = 0; s < samples; ++s) {
    const std::vector<GaussianRational> prefix{random_gaussian(rng, -2, 2), random_gaussian(rng, -2, 2),
                                               random_gaussian(rng, -2, 2)};
    test_point(boundary_point_over(surface, prefix, random_rational(rng, -2, 2)));
  }
  o.details["samples"] = samples;
  o.details["signature"] = jq(expected);
  if (spec.float_path()) o.details["min_margin"] = min_margin;
  return o;
}

// Hessian of the graph function against the Levi form of its tube at points
// over random real bases.
Outcome tube_levi(const Params& P, Rng& rng, const FloatPolynomial& graph, std::optional<Inertia> expected,
                  double box) {
  Outcome o;
  const double margin = P.real("margin", 1e-9);
  const int samples = P.integer("samples", 20);
  const std::size_t n = graph.nvars();
  const FloatPolynomial rho = tube_rho(graph);
  double min_margin = 1.0;
  json first;
  for (int s = 0; s < samples; ++s) {
    std::vector<double> x;
    std::vector<ComplexFloat> pt;
    for (std::size_t j = 0; j < n; ++j) {
      x.push_back(random_double(rng, -box, box));
      pt.emplace_back(x.back(), random_double(rng, -1.0, 1.0));
    }
    std::vector<ComplexFloat> xr(x.begin(), x.end());
    pt.emplace_back(evaluate<ComplexFloat>(graph, xr).real(), random_double(rng, -1.0, 1.0));
    const SpectralSignature hess = tube_hessian_signature(graph, std::span<const double>(x));
    const LeviData levi = levi_form(rho, pt);
    min_margin = std::min({min_margin, hess.margin, levi.spectrum.margin});
    bool ok = hess.inertia == levi.signature() && hess.margin > margin && levi.spectrum.margin > margin;
    if (expected) ok = ok && hess.inertia == *expected;
    if (s == 0) first = jq(hess.inertia);
    o.record(ok);
  }
  o.details["samples"] = samples;
  o.details["signature"] = first;
  o.details["min_margin"] = min_margin;
  return o;
}

Outcome levi(const CheckSpec& spec, const Params& P, Rng& rng) {
  const RegistryId id = parse_registry_id(spec.target);
  if (id.name == "M_plus" || id.name == "M_minus") return model_levi(spec, P, rng, id);
  const std::optional<Inertia> expected =
      P.has("signature") ? std::optional(parse_signature(P.str("signature"))) : std::nullopt;
  const double box = P.real("box", 3.0);
  if (id.name == "sigma") {
    if (!spec.float_path()) throw ConfigError("the sigma family is checked on the floating path only");
    auto o = tube_levi(P, rng, *resolve(spec.target).float_graph, expected, box);
    o.details["sigma"] = id.args.at("sigma");
    return o;
  }
  if (id.name == "gamma")
    return tube_levi(P, rng, convert<ComplexFloat>(gamma_graph(Rational::parse(id.args.at("alpha")))), expected,
                     box);
  if (id.name == "cayley") return tube_levi(P, rng, convert<ComplexFloat>(cayley_graph()), expected, box);
  throw ConfigError("no Levi check for target '" + spec.target + "'");
}

// ---------------------------------------------------------------------------
// chern_moser

Outcome chern_moser(const CheckSpec& spec, const Params& P, Rng& rng) {
  Outcome o;
  const RegistryId id = parse_registry_id(spec.target);
  const CatalogObject obj = resolve(spec.target);
  if (!obj.rho) throw ConfigError("target '" + spec.target + "' has no defining polynomial");
  const NormalFormSurface nf = normal_form_from_rho(*obj.rho);
  const std::size_t m = nf.form.dimension();

  json conds = json::object();
  for (const auto& c : normal_form_check(nf).conditions) conds[c.name] = o.record(c.holds);
  o.details["trace_conditions"] = conds;

  const Umbilicity u = umbilicity_at_origin(nf);
  o.record(u.umbilic == P.flag("umbilic", false));
  o.details["umbilic"] = u.umbilic;
  if (u.witness) o.details["witness"] = to_string(*u.witness);
  if (P.has("witness")) o.record(u.witness && *u.witness == parse_polynomial(P.str("witness"), m));

  const int ce_samples = P.integer("counterexample_samples", 10);
  std::size_t ce_ok = 0;
  for (int s = 0; s < ce_samples; ++s) {
    const Rational c = random_nonzero_rational(rng, -5, 5);
    const CounterexampleTrace ce = counterexample_trace(nf.form, c);
    if (o.record(ce.matches)) ++ce_ok;
    if (s == 0) {
      o.details["counterexample_c"] = jq(c);
      o.details["counterexample_trace"] = to_string(ce.trace);
    }
  }
  o.details["counterexample_accepted"] = ce_ok;

  if (id.name == "M_plus" || id.name == "M_minus") {
    const int sign = sign_of_group(id);
    const int samples = P.integer("scaling_samples", 10);
    std::size_t sc_ok = 0;
    for (int s = 0; s < samples; ++s) {
      const PParams p = translation_free(random_p_params(rng, sign));
      const MatrixQi u_exact = make_isotropy_matrix(p);
      const Rational lambda = p.q * p.q;
      bool ok = true;
      if (spec.exact_path()) {
        const ScalingReport r = linear_scaling_check(nf, u_exact, lambda);
        ok = r.preserves_form && r.identity_holds;
      }
      if (spec.float_path()) {
        Eigen::MatrixXcd uf(3, 3);
        for (Eigen::Index i = 0; i < 3; ++i)
          for (Eigen::Index j = 0; j < 3; ++j) uf(i, j) = to_complex(u_exact(i, j));
        const ScalingReport r = linear_scaling_check(nf, uf, lambda.to_double(), P.real("tolerance", 1e-9));
        ok = ok && r.preserves_form && r.identity_holds;
      }
      if (o.record(ok)) ++sc_ok;
    }
    o.details["scaling_accepted"] = sc_ok;
  }
  return o;
}

// ---------------------------------------------------------------------------
// lie

bool is_zero_matrix(const MatrixQi& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) return false;
  return true;
}

VectorQi vec3(const GaussianRational& a, const GaussianRational& b, const GaussianRational& c) {
  VectorQi v(3);
  v << a, b, c;
  return v;
}

Outcome lie(const CheckSpec& spec, const Params& P, Rng& rng) {
  Outcome o;
  const RegistryId id = parse_registry_id(spec.target);
  const std::string test = P.str("test");
  o.details["test"] = test;

  if (test == "killing") {
    const auto rank = exact_rank(killing_gram(sl3_basis()));
    o.record(rank == 8);
    o.details["gram_rank"] = rank;
  } else if (test == "ad_kernel") {
    const auto bound = static_cast<std::size_t>(P.integer("bound", 4));
    const std::string large = P.str("large", "E12");
    json cases = json::array();
    for (const auto& c : jordan_test_set()) {
      const LieSubspace s = perp(LieSubspace({c.p}, Field::complex));
      const std::size_t k = ad_kernel_dim(c.p, s);
      const bool closed = is_subalgebra(s).closed;
      o.record(c.name == large ? k >= bound : k < bound);
      if (c.name == large) o.record(!closed);
      cases.push_back({{"p", c.name}, {"perp_dim", s.dimension()}, {"kernel_dim", k}, {"perp_closed", closed}});
    }
    o.details["cases"] = cases;
  } else if (test == "candidates") {
    json out = json::array();
    for (const auto& [name, s] : {std::pair{"first", first_candidate()}, std::pair{"second", second_candidate()}}) {
      const bool closed = is_subalgebra(s).closed;
      o.record(s.dimension() == 6 && closed);
      out.push_back({{"candidate", name}, {"dim", s.dimension()}, {"closed", closed}});
    }
    o.details["candidates"] = out;
  } else if (test == "algebra_dims") {
    if (id.name != "u21" && id.name != "su21") throw ConfigError("algebra_dims applies to u21 and su21");
    const bool traceless = id.name == "su21";
    const LieSubspace s = unitary_algebra(diag_form_21(), traceless);
    const bool closed = is_subalgebra(s).closed;
    o.record(s.dimension() == (traceless ? 8u : 9u) && closed);
    o.details["dim"] = s.dimension();
    o.details["closed"] = closed;
  } else if (test == "stabilizer") {
    const MatrixQi h = diag_form_21();
    const int samples = P.integer("samples", 10);
    struct Class {
      const char* name;
      VectorQi v;
      std::size_t expected;
    };
    const std::vector<Class> classes{{"positive", vec3(1, 0, 0), 4}, {"negative", vec3(0, 0, 1), 4},
                                     {"null", vec3(1, 0, 1), 5}};
    json out = json::array();
    for (const auto& c : classes) {
      std::set<std::size_t> dims;
      for (int s = 0; s < samples; ++s) {
        const MatrixQi g = random_pseudo_unitary(rng);
        const bool unitary = MatrixQi(adjoint_of(g) * h * g) == h;
        const std::size_t d = stabilizer_up_to_scale_dim(VectorQi(g * c.v), h);
        dims.insert(d);
        o.record(unitary && d == c.expected);
      }
      out.push_back({{"class", c.name}, {"dims", dims}, {"expected", c.expected}});
    }
    o.details["classes"] = out;
  } else if (test == "isotropy") {
    const MatrixQi h = pairing_form();
    const auto gens = isotropy_generators();
    for (const auto& x : gens) o.record(is_zero_matrix(MatrixQi(x.transpose() * h + h * conjugate_of(x))));
    const LieSubspace s(gens, Field::real);
    const bool closed = is_subalgebra(s).closed;
    o.record(s.dimension() == 6 && closed);
    o.details["dim"] = s.dimension();
    o.details["closed"] = closed;
    const int samples = P.integer("samples", 50);
    std::size_t ok = 0;
    for (int k = 0; k < samples; ++k) {
      const PParams p = translation_free(random_p_params(rng, k % 2 == 0 ? 1 : -1));
      const MatrixQi u = make_isotropy_matrix(p);
      if (o.record(MatrixQi(u.transpose() * h * conjugate_of(u)) == h)) ++ok;
    }
    o.details["matrices_accepted"] = ok;
    o.details["matrices"] = samples;
  } else if (test == "line_image") {
    const LieSubspace s(isotropy_generators(), Field::real);
    const VectorQi v = vec3(0, 1, 0);
    const int samples = P.integer("samples", 50);
    std::size_t on_line = 0;
    for (int k = 0; k < samples; ++k) {
      VectorQi w;
      if (k % 2 == 0) {
        GaussianRational c(0);
        while (c.is_zero()) c = random_gaussian(rng, -3, 3);
        w = vec3(0, c, 0);
      } else {
        do {
          w = vec3(random_gaussian(rng, -3, 3), random_gaussian(rng, -3, 3), random_gaussian(rng, -3, 3));
        } while (is_zero_matrix(w));
      }
      const bool expected = proportional(v, w);
      if (expected) ++on_line;
      const LineImageResult r = line_image_test(s, w);
      o.record(r.proportional_to_v == expected && r.into_line == expected);
    }
    o.details["samples"] = samples;
    o.details["on_line"] = on_line;
  } else {
    throw ConfigError("unknown lie test '" + test + "'");
  }
  return o;
}

// ---------------------------------------------------------------------------
// line_witness

Outcome line_witness(const CheckSpec& spec, const Params& P, Rng& rng) {
  Outcome o;
  const CatalogObject obj = resolve(spec.target);
  if (!obj.domain) throw ConfigError("target '" + spec.target + "' is not a domain");
  ComplexLine line;
  if (P.has("base")) {
    line.base = parse_gaussian_list(P.str("base"));
    line.direction = parse_gaussian_list(P.str("direction"));
  } else {
    const auto stated = stated_line(spec.target);
    if (!stated) throw ConfigError("no stored line for '" + spec.target + "'");
    line = *stated;
  }
  std::vector<GaussianRational> extra;
  const int samples = P.integer("samples", 8);
  for (int s = 0; s < samples; ++s) extra.push_back(random_gaussian(rng, -100, 100));
  const LineWitness w = contains_complex_line(*obj.domain, line.base, line.direction, extra);
  o.record(w.certified());
  o.details["base"] = jq_list(line.base);
  o.details["direction"] = jq_list(line.direction);
  o.details["restricted"] = to_string(w.restricted);
  if (w.constant_value) o.details["constant_value"] = jq(*w.constant_value);
  o.details["radial_certificate"] = w.radial_certificate;
  o.details["samples_inside"] = w.all_samples_inside;
  return o;
}

// ---------------------------------------------------------------------------
// closure

Outcome closure(const CheckSpec& spec, const Params& P, Rng& rng) {
  Outcome o;
  const RegistryId id = parse_registry_id(spec.target);
  const int sign = sign_of_group(id);
  const HermitianPolynomial rho = m_rho(sign);
  const HoloPolyMap identity = HoloPolyMap::identity(4);

  auto recovered_equals = [&](const HoloPolyMap& f, const PParams& expected) {
    try {
      return recover_p_params(f, sign) == expected;
    } catch (const ClosureViolation&) {
      return false;
    }
  };

  const int pairs = P.integer("pairs", 50);
  std::size_t pair_ok = 0;
  for (int k = 0; k < pairs; ++k) {
    const PParams a = random_p_params(rng, sign);
    const PParams b = random_p_params(rng, sign);
    const HoloPolyMap fab = compose(make_p_element(a), make_p_element(b));
    const PParams c = p_compose(a, b);
    const auto cert = invariance_certificate(rho, fab);
    const bool ok = recovered_equals(fab, c) && make_p_element(c) == fab && cert.exact &&
                    cert.factor == GaussianRational((a.q * b.q).pow(4));
    if (o.record(ok)) ++pair_ok;
  }
  o.details["pairs"] = pairs;
  o.details["pairs_accepted"] = pair_ok;

  const int draws = P.integer("inverse_draws", 20);
  std::size_t inv_ok = 0;
  bool identity_ok = recovered_equals(identity, PParams::identity(sign)) &&
                     make_p_element(PParams::identity(sign)) == identity;
  o.record(identity_ok);
  for (int k = 0; k < draws; ++k) {
    const PParams a = random_p_params(rng, sign);
    const PParams inv = p_inverse(a);
    const HoloPolyMap f = make_p_element(a);
    const HoloPolyMap g = make_p_element(inv);
    const bool ok = compose(f, g) == identity && compose(g, f) == identity && recovered_equals(f, a) &&
                    p_compose(a, inv) == PParams::identity(sign);
    if (o.record(ok)) ++inv_ok;
  }
  o.details["identity_ok"] = identity_ok;
  o.details["inverse_draws"] = draws;
  o.details["inverse_accepted"] = inv_ok;

  if (P.flag("examples", true)) {
    PParams a = PParams::identity(sign), b = PParams::identity(sign);
    a.q = 2;
    b.q = 3;
    const PParams c = p_compose(a, b);
    o.details["q_example"] = jq(c.q);
    o.record(c.q == Rational(6) && recovered_equals(compose(make_p_element(a), make_p_element(b)), c));
    a = b = PParams::identity(sign);
    a.u = 1;
    b.u = 2;
    const PParams d = p_compose(a, b);
    o.details["u_example"] = jq(d.u);
    o.record(d.u == Rational(3) && recovered_equals(compose(make_p_element(a), make_p_element(b)), d));
  }
  return o;
}

// ---------------------------------------------------------------------------
// rank

Outcome rank(const CheckSpec& spec, const Params& P, Rng&) {
  Outcome o;
  const RegistryId id = parse_registry_id(spec.target);
  const int sign = sign_of_group(id);
  const double step = P.real("step", 1e-6);
  const double cutoff = P.real("cutoff", 1e-8);
  const int expected = P.integer("expected", kPChartDimension);
  const Eigen::MatrixXd jac = p_chart_jacobian(sign, step);
  const Eigen::JacobiSVD<Eigen::MatrixXd> svd(jac);
  const Eigen::VectorXd sv = svd.singularValues();
  const double top = sv.size() ? sv(0) : 0.0;
  int r = 0;
  json values = json::array();
  for (Eigen::Index k = 0; k < sv.size(); ++k) {
    values.push_back(sv(k));
    if (sv(k) > cutoff * top) ++r;
  }
  o.record(r == expected);
  o.details["rank"] = r;
  o.details["rows"] = jac.rows();
  o.details["singular_values"] = values;
  o.details["smallest_ratio"] = sv.size() ? sv(sv.size() - 1) / top : 0.0;
  return o;
}

Outcome dispatch(const CheckSpec& spec, const Params& P, Rng& rng) {
  if (spec.kind == "invariance") return invariance(spec, P, rng);
  if (spec.kind == "transitivity") return transitivity(spec, P, rng);
  if (spec.kind == "levi") return levi(spec, P, rng);
  if (spec.kind == "chern_moser") return chern_moser(spec, P, rng);
  if (spec.kind == "lie") return lie(spec, P, rng);
  if (spec.kind == "line_witness") return line_witness(spec, P, rng);
  if (spec.kind == "closure") return closure(spec, P, rng);
  if (spec.kind == "rank") return rank(spec, P, rng);
  throw ConfigError("unknown check kind '" + spec.kind + "'");
}

}  // namespace

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass:
      return "pass";
    case CheckStatus::fail:
      return "fail";
    case CheckStatus::error:
      return "error";
  }
  return "?";
}

CheckResult run_check(const CheckSpec& spec) {
  const auto start = std::chrono::steady_clock::now();
  CheckResult r;
  r.id = spec.id;
  r.kind = spec.kind;
  r.target = spec.target;
  r.criterion = spec.criterion;
  try {
    Rng rng(spec.seed);
    const Params params(spec);
    Outcome o = dispatch(spec, params, rng);
    params.ensure_all_used();
    const bool holds = o.total > 0 && o.accepted == o.total;
    const bool pass = spec.expect_reject ? o.total > 0 && o.accepted == 0 : holds;
    r.status = pass ? CheckStatus::pass : CheckStatus::fail;
    r.details = std::move(o.details);
    r.details["accepted"] = o.accepted;
    r.details["total"] = o.total;
    r.details["expect"] = spec.expect_reject ? "reject" : "accept";
  } catch (const std::exception& e) {
    r.status = CheckStatus::error;
    r.message = e.what();
    r.details = json::object();
  }
  r.wall_time_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace homdom
