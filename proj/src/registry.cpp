#include <cctype>
#include <sstream>

#include "homdom/catalog.hpp"
#include "homdom/poly_io.hpp"

namespace homdom {

std::string RegistryId::str() const {
  if (args.empty()) return name;
  std::string out = name + "(";
  bool first = true;
  for (const auto& [k, v] : args) {
    if (!first) out += ",";
    first = false;
    out += k + "=" + v;
  }
  return out + ")";
}

namespace {

std::string trim(const std::string& s) {
  std::size_t a = 0;
  std::size_t b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

}  // namespace

RegistryId parse_registry_id(const std::string& text) {
  const std::string t = trim(text);
  RegistryId id;
  const auto open = t.find('(');
  if (open == std::string::npos) {
    id.name = t;
  } else {
    if (t.back() != ')') throw ParseError("registry id '" + t + "' is missing ')'");
    id.name = trim(t.substr(0, open));
    std::stringstream body(t.substr(open + 1, t.size() - open - 2));
    std::string item;
    while (std::getline(body, item, ',')) {
      const auto eq = item.find('=');
      if (eq == std::string::npos) throw ParseError("registry argument '" + item + "' needs key=value");
      std::string key = trim(item.substr(0, eq));
      if (key == "\xcf\x83") key = "sigma";  // the Greek letter
      if (!id.args.emplace(key, trim(item.substr(eq + 1))).second)
        throw ParseError("duplicate registry argument '" + key + "'");
    }
  }
  if (id.name.empty()) throw ParseError("empty registry id");
  return id;
}

namespace {

const std::string& arg(const RegistryId& id, const std::string& key) {
  auto it = id.args.find(key);
  if (it == id.args.end()) throw ParseError("'" + id.name + "' needs argument '" + key + "'");
  return it->second;
}

std::string arg_or(const RegistryId& id, const std::string& key, const std::string& fallback) {
  auto it = id.args.find(key);
  return it == id.args.end() ? fallback : it->second;
}

void allow_only(const RegistryId& id, std::initializer_list<const char*> keys) {
  for (const auto& [k, v] : id.args) {
    bool ok = false;
    for (const char* key : keys) ok = ok || k == key;
    if (!ok) throw ParseError("'" + id.name + "' does not take argument '" + k + "'");
  }
}

int parse_side(const std::string& v) {
  if (v == ">" || v == "+" || v == "+1" || v == "1") return 1;
  if (v == "<" || v == "-" || v == "-1") return -1;
  throw ParseError("side must be '>' or '<', got '" + v + "'");
}

int parse_int(const std::string& v) {
  try {
    std::size_t used = 0;
    const int out = std::stoi(v, &used);
    if (used != v.size()) throw ParseError("");
    return out;
  } catch (const std::exception&) {
    throw ParseError("expected an integer, got '" + v + "'");
  }
}

Rational parse_rational_arg(const std::string& v) {
  try {
    return Rational::parse(v);
  } catch (const Error& e) {
    throw ParseError("expected a rational, got '" + v + "'");
  }
}

double parse_double_arg(const std::string& v) {
  try {
    std::size_t used = 0;
    const double out = std::stod(v, &used);
    if (used != v.size()) throw ParseError("");
    return out;
  } catch (const std::exception&) {
    throw ParseError("expected a number, got '" + v + "'");
  }
}

std::string map_text(const Equivalence& eq) {
  std::ostringstream os;
  os << "source rho: " << to_string(eq.source_rho) << "\n";
  os << "target rho: " << to_string(eq.target_rho) << "\n";
  os << "map (z_k -> scale_k * inner_k):\n";
  for (std::size_t k = 0; k < eq.map.inner.n_out(); ++k)
    os << "  z" << k + 1 << " -> " << eq.map.scale[k].str() << " * (" << to_string(eq.map.inner[k]) << ")\n";
  return os.str();
}

CatalogObject surface_object(const std::string& id, const std::string& summary, const Hypersurface& s) {
  CatalogObject o;
  o.id = id;
  o.summary = summary;
  o.rho = s.rho;
  o.detail = "rho: " + to_string(s.rho) + "\n";
  return o;
}

CatalogObject domain_object(const std::string& id, const std::string& summary, const SidedDomain& d) {
  CatalogObject o = surface_object(id, summary, d.surface);
  o.domain = d;
  o.detail += std::string("side: rho ") + (d.side > 0 ? "> 0" : "< 0") + "\n";
  return o;
}

CatalogObject equivalence_object(const std::string& id, const std::string& summary, const Equivalence& eq) {
  CatalogObject o;
  o.id = id;
  o.summary = summary;
  o.rho = eq.source_rho;
  o.equivalence = eq;
  o.detail = map_text(eq);
  return o;
}

std::string p_group_text(int sign) {
  const char* s = sign > 0 ? "-" : "+";
  const char* t = sign > 0 ? "+" : "-";
  std::ostringstream os;
  os << "z1 -> q e z1 + rho\n"
     << "z2 -> (" << s << "2|rho|^2 q e + q^2 b) z1 + q^3 e z2 + q d z3 " << s << " 2 conj(rho) q^2 e^2 z1^2 + sigma\n"
     << "z3 -> -conj(d) e f z1 + q^2 f z3 + tau\n"
     << "z4 -> (2 conj(sigma) q e + 2 conj(rho) q^2 b - 2 conj(tau) conj(d) e f) z1 + 2 conj(rho) q^3 e z2\n"
     << "      + (2 conj(rho) q d + 2 conj(tau) q^2 f) z3 + q^4 z4 " << s << " 2 conj(rho)^2 q^2 e^2 z1^2\n"
     << "      + rho conj(sigma) + sigma conj(rho) + |tau|^2 " << t << " |rho|^4 + i u\n"
     << "e = e^{i phi}, f = e^{i psi}, q > 0, |d|^2 = -2 q^3 Re(e conj(b))\n";
  return os.str();
}

}  // namespace

CatalogObject resolve(const std::string& text) {
  const RegistryId id = parse_registry_id(text);
  const std::string& n = id.name;
  if (n == "gamma") {
    allow_only(id, {"alpha"});
    const Rational alpha = parse_rational_arg(arg(id, "alpha"));
    return surface_object(id.str(), "tube over the quartic graph x4 = x1 x2 + x3^2 + x1^2 x3 + alpha x1^4",
                          make_gamma(alpha));
  }
  if (n == "omega") {
    allow_only(id, {"alpha", "side"});
    const Rational alpha = parse_rational_arg(arg(id, "alpha"));
    return domain_object(id.str(), "tube domain on one side of the quartic graph",
                         make_omega(alpha, parse_side(arg_or(id, "side", ">"))));
  }
  if (n == "M_plus" || n == "M_minus") {
    allow_only(id, {});
    const int sign = n == "M_plus" ? 1 : -1;
    return surface_object(n, "model quartic hypersurface Re z4 = z1 zb2 + z2 zb1 + |z3|^2 +- |z1|^4",
                          make_m(sign));
  }
  if (n == "D_plus" || n == "D_minus") {
    allow_only(id, {"side"});
    const int sign = n == "D_plus" ? 1 : -1;
    return domain_object(id.str(), "domain on one side of the model quartic hypersurface",
                         make_d(sign, parse_side(arg_or(id, "side", ">"))));
  }
  if (n == "D0") {
    allow_only(id, {"side"});
    return domain_object(id.str(), "domain on one side of Re z4 = |z1|^2 + |z2|^2 - |z3|^2",
                         SidedDomain(make_d0(), parse_side(arg_or(id, "side", ">")), id.str()));
  }
  if (n == "P_plus" || n == "P_minus") {
    allow_only(id, {});
    const int sign = n == "P_plus" ? 1 : -1;
    CatalogObject o;
    o.id = n;
    o.summary = "13-dimensional group of polynomial automorphisms of the model quartic domains";
    o.rho = m_rho(sign);
    o.detail = "preserves rho: " + to_string(m_rho(sign)) + "\n" + p_group_text(sign);
    return o;
  }
  if (n == "normalizer") {
    allow_only(id, {"alpha"});
    const Rational alpha = parse_rational_arg(arg(id, "alpha"));
    return equivalence_object(id.str(), "polynomial map from the quartic tube to its model domain",
                              make_normalizer(alpha));
  }
  if (n == "quadric") {
    allow_only(id, {"p", "n", "side"});
    const int p = parse_int(arg(id, "p"));
    const int nn = parse_int(arg(id, "n"));
    return domain_object(id.str(), "domain on one side of Re z_{n+1} = H_{p,n}(z, zbar)",
                         make_quadric_domain(p, nn, parse_side(arg_or(id, "side", ">"))));
  }
  if (n == "tube_quadric") {
    allow_only(id, {"p", "n"});
    const int p = parse_int(arg(id, "p"));
    const int nn = parse_int(arg(id, "n"));
    return surface_object(id.str(), "tube over x_{n+1} = H_{p,n}(x, x)",
                          Hypersurface(tube_quadric_rho(p, nn), id.str()));
  }
  if (n == "tube_realisation") {
    allow_only(id, {"p", "n"});
    const int p = parse_int(arg(id, "p"));
    const int nn = parse_int(arg(id, "n"));
    return equivalence_object(id.str(), "map from the quadric to its tube realisation",
                              make_tube_realisation(p, nn));
  }
  if (n == "cayley") {
    allow_only(id, {"side"});
    CatalogObject o = equivalence_object(id.str(), "tube over the cubic graph x3 = x1 x2 + x1^3",
                                         make_cayley_equivalence());
    o.domain = SidedDomain(make_cayley_surface(), parse_side(arg_or(id, "side", ">")), id.str());
    return o;
  }
  if (n == "sigma") {
    allow_only(id, {"sigma"});
    const double sigma = parse_double_arg(arg(id, "sigma"));
    CatalogObject o;
    o.id = id.str();
    o.summary = "seven-variable quartic graph with quadratic part of signature (5,2)";
    try {
      o.float_graph = sigma_graph(sigma);
    } catch (const DomainError& e) {
      throw ParseError(std::string("sigma out of range: ") + e.what());
    }
    o.detail = "graph: x8 = " + to_string(*o.float_graph) + "\n";
    return o;
  }
  if (n == "sl3" || n == "su21" || n == "u21" || n == "isotropy_algebra") {
    allow_only(id, {});
    CatalogObject o;
    o.id = n;
    if (n == "sl3") {
      o.summary = "complex Lie algebra of traceless 3x3 matrices with the form trace(XY)";
    } else if (n == "isotropy_algebra") {
      o.summary = "real Lie algebra of the isotropy matrices, preserving z1 zb2 + z2 zb1 + |z3|^2";
    } else {
      o.summary = std::string(n == "su21" ? "traceless " : "") +
                  "real Lie algebra preserving |z1|^2 + |z2|^2 - |z3|^2";
    }
    return o;
  }
  throw ParseError("unknown registry id '" + text + "'");
}

std::optional<ComplexLine> stated_line(const std::string& text) {
  const RegistryId id = parse_registry_id(text);
  auto unit = [](std::size_t size, std::size_t k) {
    std::vector<GaussianRational> v(size, GaussianRational(0));
    v[k] = 1;
    return v;
  };
  if (id.name == "D_plus" || id.name == "D_minus") {
    const int side = parse_side(arg_or(id, "side", ">"));
    std::vector<GaussianRational> base(4, GaussianRational(0));
    base[3] = side;
    return ComplexLine{base, unit(4, 1)};
  }
  if (id.name == "quadric") {
    const int p = parse_int(arg(id, "p"));
    const int n = parse_int(arg(id, "n"));
    const int side = parse_side(arg_or(id, "side", ">"));
    const auto m = static_cast<std::size_t>(n) + 1;
    if (side < 0) return ComplexLine{quadric_base_point(n, -1), unit(m, 0)};
    if (p < n) return ComplexLine{quadric_base_point(n, 1), unit(m, m - 2)};
  }
  return std::nullopt;
}

std::string describe(const std::string& id) {
  const CatalogObject o = resolve(id);
  return o.id + "\n" + o.summary + "\n" + o.detail;
}

std::vector<RegistryListing> list_registry() {
  return {
      {"gamma(alpha=1/12)", "tube over the quartic graph with parameter alpha"},
      {"omega(alpha=1,side=>)", "tube domain above or below the quartic graph"},
      {"M_plus", "model quartic hypersurface, + sign"},
      {"M_minus", "model quartic hypersurface, - sign"},
      {"D_plus(side=>)", "domain on one side of M_plus"},
      {"D_minus(side=<)", "domain on one side of M_minus"},
      {"D0(side=>)", "domain on one side of Re z4 = |z1|^2 + |z2|^2 - |z3|^2"},
      {"P_plus", "automorphism group of the D_plus domains"},
      {"P_minus", "automorphism group of the D_minus domains"},
      {"normalizer(alpha=7/12)", "map from the quartic tube to its model"},
      {"quadric(p=2,n=3,side=>)", "domain on one side of a Hermitian quadric"},
      {"tube_quadric(p=1,n=2)", "tube over a real quadric graph"},
      {"tube_realisation(p=1,n=1)", "map from a Hermitian quadric to its tube form"},
      {"cayley", "tube over the cubic graph and its map to a quadric"},
      {"sigma(sigma=1)", "seven-variable quartic graph"},
      {"sl3", "traceless 3x3 complex matrices"},
      {"su21", "traceless algebra of a (2,1) Hermitian form"},
      {"u21", "algebra of a (2,1) Hermitian form"},
      {"isotropy_algebra", "tangent algebra of the isotropy matrices"},
  };
}

}  // namespace homdom
