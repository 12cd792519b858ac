#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "homdom/eigen_support.hpp"
#include "homdom/linalg.hpp"
#include "homdom/polynomial.hpp"

namespace homdom {

/// <z,z> = sum h_{ab} z_a conj(z_b) with its exact inverse g.
class HermitianForm {
 public:
  /// Throws DomainError if h is not Hermitian or is singular.
  explicit HermitianForm(MatrixQi h);

  /// z1 zb2 + z2 zb1 + |z3|^2.
  static HermitianForm pairing();
  /// |z1|^2 + ... + |zp|^2 - |z_{p+1}|^2 - ... - |zm|^2.
  static HermitianForm diagonal(int p, int m);

  std::size_t dimension() const { return static_cast<std::size_t>(h_.rows()); }
  const MatrixQi& h() const { return h_; }
  const MatrixQi& g() const { return g_; }
  Inertia signature() const;

  /// <z,z> as a polynomial in m variables.
  HermitianPolynomial polynomial() const;

 private:
  MatrixQi h_;
  MatrixQi g_;
};

/// tr = sum_{a,b} g_{ba} d^2 / dz_a dzbar_b, so tr <z,z> = m.
HermitianPolynomial trace_op(const HermitianPolynomial& p, const HermitianForm& form);
/// trace_op applied k times.
HermitianPolynomial trace_power(const HermitianPolynomial& p, const HermitianForm& form, int k);

/// u = <z,z> + sum_{k,l >= 2} F_{kl}(z, zbar), v-independent.
struct NormalFormSurface {
  HermitianForm form;
  std::map<std::pair<int, int>, HermitianPolynomial> components;

  /// F_{kl}; zero when absent.
  HermitianPolynomial component(int k, int l) const;
};

/// Reads u = <z,z> + F from rho = Re z_{m+1} - <z,z> - F, with F free of
/// z_{m+1}. Throws DomainError if rho has another shape or a bigraded piece
/// of F has k < 2 or l < 2.
NormalFormSurface normal_form_from_rho(const HermitianPolynomial& rho);

struct TraceCondition {
  std::string name;  ///< "tr F22", "tr^2 F23", "tr^3 F33"
  bool holds = false;
  HermitianPolynomial residual;
};

struct NormalFormReport {
  std::vector<TraceCondition> conditions;
  bool all_hold() const {
    for (const auto& c : conditions)
      if (!c.holds) return false;
    return true;
  }
};

NormalFormReport normal_form_check(const NormalFormSurface& s);

struct Umbilicity {
  bool umbilic = true;
  std::optional<HermitianPolynomial> witness;  ///< F22 when non-umbilic
};

Umbilicity umbilicity_at_origin(const NormalFormSurface& s);

/// tr(c <z,z>^2) and whether it equals 8 c <z,z>.
struct CounterexampleTrace {
  HermitianPolynomial trace;
  HermitianPolynomial expected;
  bool matches = false;
};

CounterexampleTrace counterexample_trace(const HermitianForm& form, const Rational& c);

struct ScalingReport {
  bool preserves_form = false;  ///< U^T h conj(U) = h
  bool identity_holds = false;  ///< F22(Uz, conj(Uz)) = F22(z, zbar) / lambda^2
  HermitianPolynomial residual;
  double residual_norm = 0.0;
};

ScalingReport linear_scaling_check(const NormalFormSurface& s, const MatrixQi& u, const Rational& lambda);
ScalingReport linear_scaling_check(const NormalFormSurface& s, const Eigen::MatrixXcd& u, double lambda,
                                   double tolerance = 1e-9);

}  // namespace homdom
