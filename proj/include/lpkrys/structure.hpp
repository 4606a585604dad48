// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lpkrys/connection.hpp"
#include "lpkrys/curvature.hpp"
#include "lpkrys/errors.hpp"
#include "lpkrys/frame.hpp"
#include "lpkrys/linalg.hpp"
#include "lpkrys/tensor.hpp"

namespace lpkrys {

// nu is never free data: nu(E) = g(E, zeta) always.
inline FrameVector derive_nu(const FrameManifold& M, const FrameVector& zeta) {
  const int n = M.dim();
  if (static_cast<int>(zeta.size()) != n)
    throw DimensionMismatch("derive_nu: zeta length does not match dimension");
  FrameVector nu(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j)
    nu[static_cast<size_t>(j)] = pairing(M.metric(), basis_vector(n, j), zeta);
  return nu;
}

// Candidate almost-paracontact data on a frame model: phi in the column
// convention (phi e_j = phi^i_j e_i), zeta as a frame vector, nu derived.
// Construction checks shapes only; whether the axioms hold is the job of
// the check_* functions below, so invalid structures are representable and
// reportable.
class ParacontactStructure {
 public:
  ParacontactStructure(const FrameManifold& M, SquareMatrix phi, FrameVector zeta)
      : phi_(std::move(phi)), zeta_(std::move(zeta)) {
    if (phi_.order() != M.dim())
      throw DimensionMismatch("phi order does not match dimension");
    if (static_cast<int>(zeta_.size()) != M.dim())
      throw DimensionMismatch("zeta length does not match dimension");
    nu_ = derive_nu(M, zeta_);
  }

  const SquareMatrix& phi() const { return phi_; }
  const FrameVector& zeta() const { return zeta_; }
  const FrameVector& nu() const { return nu_; }

  FrameVector apply_phi(const FrameVector& x) const { return phi_.apply(x); }
  Rational nu_of(const FrameVector& x) const {
    Rational s;
    for (size_t j = 0; j < nu_.size(); ++j) {
      if (nu_[j].is_zero() || x[j].is_zero()) continue;
      s += nu_[j] * x[j];
    }
    return s;
  }

 private:
  SquareMatrix phi_;
  FrameVector zeta_;
  FrameVector nu_;
};

// One verified identity. The residual keeps the full left-minus-right
// tensor; the witness is the 1-based index tuple of its largest-magnitude
// entry (lexicographically first among ties), empty when the check passes
// or the residual is a scalar.
struct CheckEntry {
  std::string name;
  std::string label;  // identity tag used in reports, e.g. "2.10"
  bool passed = false;
  bool required = true;  // informational entries do not affect the verdict
  std::vector<int> witness;
  std::optional<Rational> worst_value;
  std::optional<MultiTensor> residual;  // kept in full on failure, for debugging
  std::string note;
};

inline CheckEntry make_entry(std::string name, std::string label, const MultiTensor& residual) {
  CheckEntry e;
  e.name = std::move(name);
  e.label = std::move(label);
  const auto worst = residual.worst_entry();
  e.passed = !worst.has_value();
  if (worst) {
    e.witness.reserve(worst->size());
    for (int i : *worst) e.witness.push_back(i + 1);
    e.worst_value = residual.at_index(*worst);
    e.residual = residual;
  }
  return e;
}

struct CheckReport {
  std::vector<CheckEntry> entries;

  bool verdict() const {
    for (const auto& e : entries)
      if (e.required && !e.passed) return false;
    return true;
  }
  bool all_passed() const {
    for (const auto& e : entries)
      if (!e.passed) return false;
    return true;
  }
  const CheckEntry* find(const std::string& name) const {
    for (const auto& e : entries)
      if (e.name == name) return &e;
    return nullptr;
  }
  void append(CheckReport other) {
    for (auto& e : other.entries) entries.push_back(std::move(e));
  }
};

// Axioms of a Lorentzian almost paracontact metric structure:
//   nu(zeta) = -1
//   phi^2 E = E + nu(E) zeta
//   phi zeta = 0 and nu(phi E) = 0
//   g(phi E, phi F) = g(E, F) + nu(E) nu(F)
//   g(E, zeta) = nu(E)
//   g(E, phi F) = g(F, phi E)
inline CheckReport check_almost_paracontact(const FrameManifold& M,
                                            const ParacontactStructure& P) {
  const int n = M.dim();
  const SquareMatrix& g = M.metric();
  const SquareMatrix& phi = P.phi();
  const FrameVector& zeta = P.zeta();
  const FrameVector& nu = P.nu();
  CheckReport report;

  report.entries.push_back(
      make_entry("nu-normalization", "2.1", scalar_tensor(n, P.nu_of(zeta) + Rational(1))));

  {
    MultiTensor res(n, {Variance::Upper, Variance::Lower});
    const SquareMatrix phi2 = phi * phi;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Rational v = phi2.at(i, j) - zeta[static_cast<size_t>(i)] * nu[static_cast<size_t>(j)];
        if (i == j) v -= Rational(1);
        res.at(i, j) = v;
      }
    report.entries.push_back(make_entry("phi-square", "2.2", res));
  }

  report.entries.push_back(
      make_entry("phi-zeta", "2.3", vector_tensor(P.apply_phi(zeta), Variance::Upper)));

  {
    MultiTensor res(n, {Variance::Lower});
    for (int j = 0; j < n; ++j) res.at(j) = P.nu_of(phi.apply(basis_vector(n, j)));
    report.entries.push_back(make_entry("nu-phi", "2.3", res));
  }

  {
    MultiTensor res(n, {Variance::Lower, Variance::Lower});
    for (int i = 0; i < n; ++i) {
      const FrameVector phi_ei = phi.apply(basis_vector(n, i));
      for (int j = 0; j < n; ++j)
        res.at(i, j) = pairing(g, phi_ei, phi.apply(basis_vector(n, j))) - g.at(i, j) -
                       nu[static_cast<size_t>(i)] * nu[static_cast<size_t>(j)];
    }
    report.entries.push_back(make_entry("phi-compatibility", "2.4", res));
  }

  {
    MultiTensor res(n, {Variance::Lower});
    const FrameVector derived = derive_nu(M, zeta);
    for (int j = 0; j < n; ++j)
      res.at(j) = nu[static_cast<size_t>(j)] - derived[static_cast<size_t>(j)];
    report.entries.push_back(make_entry("nu-duality", "2.5", res));
  }

  {
    MultiTensor res(n, {Variance::Lower, Variance::Lower});
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        res.at(i, j) = pairing(g, basis_vector(n, i), phi.apply(basis_vector(n, j))) -
                       pairing(g, basis_vector(n, j), phi.apply(basis_vector(n, i)));
    report.entries.push_back(make_entry("phi-metric-symmetry", "2.6", res));
  }

  return report;
}

// K-paracontact condition nabla_E zeta = phi E. LP-Kenmotsu structures never
// satisfy it (their nabla zeta is -E - nu(E) zeta), so callers typically
// treat this entry as informational.
inline CheckReport check_k_paracontact(const FrameManifold& M, const Connection& C,
                                       const ParacontactStructure& P) {
  const int n = M.dim();
  MultiTensor res(n, {Variance::Lower, Variance::Upper});
  for (int i = 0; i < n; ++i) {
    const FrameVector ei = basis_vector(n, i);
    const FrameVector lhs = C.derivative(ei, P.zeta());
    const FrameVector rhs = P.apply_phi(ei);
    for (int k = 0; k < n; ++k)
      res.at(i, k) = lhs[static_cast<size_t>(k)] - rhs[static_cast<size_t>(k)];
  }
  CheckReport report;
  report.entries.push_back(make_entry("killing-structure", "2.7", res));
  return report;
}

// Defining identity of the LP-Kenmotsu class plus its two first-order
// consequences:
//   (nabla_E phi)F = -g(phi E, F) zeta - nu(F) phi E
//   nabla_E zeta   = -E - nu(E) zeta
//   (nabla_E nu)F  = -g(E, F) - nu(E) nu(F)
inline CheckReport check_lp_kenmotsu(const FrameManifold& M, const Connection& C,
                                     const ParacontactStructure& P) {
  const int n = M.dim();
  const SquareMatrix& g = M.metric();
  const FrameVector& zeta = P.zeta();
  const FrameVector& nu = P.nu();
  CheckReport report;

  {
    MultiTensor res(n, {Variance::Lower, Variance::Lower, Variance::Upper});
    for (int i = 0; i < n; ++i) {
      const FrameVector ei = basis_vector(n, i);
      const SquareMatrix dphi = covariant_derivative_endomorphism(C, ei, P.phi());
      const FrameVector phi_ei = P.apply_phi(ei);
      for (int j = 0; j < n; ++j) {
        const FrameVector ej = basis_vector(n, j);
        const Rational gf = pairing(g, phi_ei, ej);
        for (int k = 0; k < n; ++k)
          res.at(i, j, k) = dphi.at(k, j) + gf * zeta[static_cast<size_t>(k)] +
                            nu[static_cast<size_t>(j)] * phi_ei[static_cast<size_t>(k)];
      }
    }
    report.entries.push_back(make_entry("covariant-phi", "2.9", res));
  }

  {
    MultiTensor res(n, {Variance::Lower, Variance::Upper});
    for (int i = 0; i < n; ++i) {
      const FrameVector ei = basis_vector(n, i);
      const FrameVector dz = C.derivative(ei, zeta);
      for (int k = 0; k < n; ++k) {
        Rational v = dz[static_cast<size_t>(k)] +
                     nu[static_cast<size_t>(i)] * zeta[static_cast<size_t>(k)];
        if (i == k) v += Rational(1);
        res.at(i, k) = v;
      }
    }
    report.entries.push_back(make_entry("covariant-zeta", "2.10", res));
  }

  {
    MultiTensor res(n, {Variance::Lower, Variance::Lower});
    for (int i = 0; i < n; ++i) {
      const FrameVector ei = basis_vector(n, i);
      for (int j = 0; j < n; ++j) {
        // (nabla_{e_i} nu)(e_j) = -nu(nabla_{e_i} e_j) for constant nu_k
        const Rational dnu = -P.nu_of(C.derivative(ei, basis_vector(n, j)));
        res.at(i, j) =
            dnu + g.at(i, j) + nu[static_cast<size_t>(i)] * nu[static_cast<size_t>(j)];
      }
    }
    report.entries.push_back(make_entry("covariant-nu", "2.11", res));
  }

  return report;
}

// Curvature consequences of the LP-Kenmotsu identity:
//   nu(R(E,F)G)  = g(F,G) nu(E) - g(E,G) nu(F)
//   R(zeta,E)F   = g(E,F) zeta - nu(F) E
//   R(E,F) zeta  = nu(F) E - nu(E) F
//   R(zeta,E)zeta = E + nu(E) zeta
//   S(E,zeta) = (n-1) nu(E),  S(zeta,zeta) = -(n-1)
//   Q zeta = (n-1) zeta
inline CheckReport check_curvature_identities(const FrameManifold& M, const CurvatureData& CD,
                                              const ParacontactStructure& P) {
  const int n = M.dim();
  const SquareMatrix& g = M.metric();
  const FrameVector& zeta = P.zeta();
  const FrameVector& nu = P.nu();
  const Rational n1(n - 1);
  CheckReport report;

  {
    MultiTensor res(n, {Variance::Lower, Variance::Lower, Variance::Lower});
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          Rational lhs;
          for (int l = 0; l < n; ++l) {
            if (CD.riemann().at(i, j, k, l).is_zero() || nu[static_cast<size_t>(l)].is_zero())
              continue;
            lhs += CD.riemann().at(i, j, k, l) * nu[static_cast<size_t>(l)];
          }
          res.at(i, j, k) = lhs - g.at(j, k) * nu[static_cast<size_t>(i)] +
                            g.at(i, k) * nu[static_cast<size_t>(j)];
        }
    report.entries.push_back(make_entry("curvature-nu", "2.12", res));
  }

  {
    MultiTensor res(n, {Variance::Lower, Variance::Lower, Variance::Upper});
    for (int i = 0; i < n; ++i) {
      const FrameVector ei = basis_vector(n, i);
      for (int j = 0; j < n; ++j) {
        const FrameVector ej = basis_vector(n, j);
        const FrameVector lhs = CD.apply(zeta, ei, ej);
        for (int k = 0; k < n; ++k) {
          Rational v = lhs[static_cast<size_t>(k)] - g.at(i, j) * zeta[static_cast<size_t>(k)];
          v += nu[static_cast<size_t>(j)] * ei[static_cast<size_t>(k)];
          res.at(i, j, k) = v;
        }
      }
    }
    report.entries.push_back(make_entry("curvature-zeta-first", "2.13", res));
  }

  {
    MultiTensor res(n, {Variance::Lower, Variance::Lower, Variance::Upper});
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        FrameVector lhs = CD.apply(basis_vector(n, i), basis_vector(n, j), zeta);
        for (int k = 0; k < n; ++k) {
          Rational v = lhs[static_cast<size_t>(k)];
          if (i == k) v -= nu[static_cast<size_t>(j)];
          if (j == k) v += nu[static_cast<size_t>(i)];
          res.at(i, j, k) = v;
        }
      }
    report.entries.push_back(make_entry("curvature-zeta-last", "2.14", res));
  }

  {
    MultiTensor res(n, {Variance::Lower, Variance::Upper});
    for (int i = 0; i < n; ++i) {
      const FrameVector ei = basis_vector(n, i);
      const FrameVector lhs = CD.apply(zeta, ei, zeta);
      for (int k = 0; k < n; ++k) {
        Rational v = lhs[static_cast<size_t>(k)] -
                     nu[static_cast<size_t>(i)] * zeta[static_cast<size_t>(k)];
        if (i == k) v -= Rational(1);
        res.at(i, k) = v;
      }
    }
    report.entries.push_back(make_entry("curvature-zeta-both", "2.15", res));
  }

  {
    MultiTensor res(n, {Variance::Lower});
    for (int i = 0; i < n; ++i)
      res.at(i) = pairing(CD.ricci(), basis_vector(n, i), zeta) - n1 * nu[static_cast<size_t>(i)];
    report.entries.push_back(make_entry("ricci-zeta", "2.16", res));
  }

  report.entries.push_back(make_entry(
      "ricci-zeta-zeta", "2.16", scalar_tensor(n, pairing(CD.ricci(), zeta, zeta) + n1)));

  {
    const FrameVector qz = CD.ricci_operator().apply(zeta);
    MultiTensor res(n, {Variance::Upper});
    for (int k = 0; k < n; ++k)
      res.at(k) = qz[static_cast<size_t>(k)] - n1 * zeta[static_cast<size_t>(k)];
    report.entries.push_back(make_entry("ricci-operator-zeta", "2.17", res));
  }

  return report;
}

// Second-order consequences involving the Ricci operator and the scalar
// curvature. In a homogeneous frame model r is constant, so the first entry
// amounts to r = n(n-1); its derivation degenerates at n = 3, where the
// entry is kept but demoted to informational.
inline CheckReport check_ricci_operator_lemma(const FrameManifold& M, const Connection& C,
                                              const CurvatureData& CD,
                                              const ParacontactStructure& P) {
  const int n = M.dim();
  const Rational n1(n - 1);
  CheckReport report;

  {
    const Rational residual = Rational(2) * (CD.scalar() - Rational(n) * n1);
    CheckEntry e = make_entry("scalar-curvature-constant", "2.20", scalar_tensor(n, residual));
    if (n == 3) {
      e.required = false;
      e.note = "derivation degenerates at n = 3; entry is informational";
    }
    report.entries.push_back(e);
  }

  {
    MultiTensor res(n, {Variance::Lower, Variance::Upper});
    for (int i = 0; i < n; ++i) {
      const FrameVector ei = basis_vector(n, i);
      const SquareMatrix dQ = covariant_derivative_endomorphism(C, ei, CD.ricci_operator());
      const FrameVector lhs = dQ.apply(P.zeta());
      const FrameVector qe = CD.ricci_operator().apply(ei);
      for (int k = 0; k < n; ++k) {
        Rational v = lhs[static_cast<size_t>(k)] - qe[static_cast<size_t>(k)];
        if (i == k) v += n1;
        res.at(i, k) = v;
      }
    }
    report.entries.push_back(make_entry("ricci-operator-derivative-zeta", "2.21", res));
  }

  {
    const SquareMatrix dQ = covariant_derivative_endomorphism(C, P.zeta(), CD.ricci_operator());
    MultiTensor res(n, {Variance::Lower, Variance::Upper});
    for (int i = 0; i < n; ++i) {
      const FrameVector ei = basis_vector(n, i);
      const FrameVector lhs = dQ.apply(ei);
      const FrameVector qe = CD.ricci_operator().apply(ei);
      for (int k = 0; k < n; ++k) {
        Rational v = lhs[static_cast<size_t>(k)] - Rational(2) * qe[static_cast<size_t>(k)];
        if (i == k) v += Rational(2) * n1;
        res.at(i, k) = v;
      }
    }
    report.entries.push_back(make_entry("ricci-operator-derivative-along-zeta", "2.22", res));
  }

  return report;
}

// Decomposition S = a g + b nu (x) nu with the closed-form coefficients
// a = r/(n-1) - 1 and b = r/(n-1) - n. Einstein means the decomposition
// holds with b = 0 (equivalently r = n(n-1)). scalar_consistent records the
// constant-curvature value r = n(n-1) forced on this class of manifolds.
struct EinsteinClassification {
  Rational a;
  Rational b;
  Rational scalar;
  bool scalar_consistent = false;  // r == n(n-1)
  bool decomposition_holds = false;
  bool einstein = false;
  std::vector<int> witness;  // 1-based worst entry when the decomposition fails
  std::string label;         // "Einstein", "nu-Einstein", or "neither"
};

inline EinsteinClassification classify_einstein(const FrameManifold& M, const CurvatureData& CD,
                                                const ParacontactStructure& P) {
  const int n = M.dim();
  const Rational n1(n - 1);
  EinsteinClassification out;
  out.a = CD.scalar() / n1 - Rational(1);
  out.b = CD.scalar() / n1 - Rational(n);
  out.scalar = CD.scalar();
  out.scalar_consistent = CD.scalar() == Rational(n) * n1;

  MultiTensor res(n, {Variance::Lower, Variance::Lower});
  const FrameVector& nu = P.nu();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      res.at(i, j) = CD.ricci().at(i, j) - out.a * M.metric().at(i, j) -
                     out.b * nu[static_cast<size_t>(i)] * nu[static_cast<size_t>(j)];
  const auto worst = res.worst_entry();
  out.decomposition_holds = !worst.has_value();
  if (worst)
    for (int i : *worst) out.witness.push_back(i + 1);
  out.einstein = out.decomposition_holds && out.b.is_zero();
  out.label = !out.decomposition_holds ? "neither"
              : out.einstein           ? "Einstein"
                                       : "nu-Einstein";
  return out;
}

}  // namespace lpkrys
