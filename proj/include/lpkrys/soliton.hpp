// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lpkrys/curvature.hpp"
#include "lpkrys/errors.hpp"
#include "lpkrys/frame.hpp"
#include "lpkrys/lie.hpp"
#include "lpkrys/linalg.hpp"
#include "lpkrys/structure.hpp"

namespace lpkrys {

enum class SolitonClass { Shrinking, Steady, Expanding };

inline std::string_view to_string(SolitonClass c) {
  switch (c) {
    case SolitonClass::Shrinking: return "shrinking";
    case SolitonClass::Steady: return "steady";
    case SolitonClass::Expanding: return "expanding";
  }
  return "unknown";
}

inline SolitonClass classify_by_lambda(const Rational& lambda) {
  const int s = lambda.sign();
  return s < 0 ? SolitonClass::Shrinking
               : s > 0 ? SolitonClass::Expanding : SolitonClass::Steady;
}

// (sigma, rho) select the flow; lambda is the soliton constant, either
// supplied or solved for by one of the closed forms below.
struct SolitonParams {
  Rational sigma;
  Rational rho;
  std::optional<Rational> lambda;
};

// The candidate soliton vector field: the structure field zeta, an explicit
// constant-coefficient field, or the gradient of a constant potential
// (identically zero, kept as its own kind because the gradient equation has
// its own endomorphism form).
struct SolitonField {
  enum class Kind { Zeta, Explicit, GradientConstant };
  Kind kind = Kind::Zeta;
  FrameVector components;  // used by Kind::Explicit only

  static SolitonField zeta() { return {Kind::Zeta, {}}; }
  static SolitonField explicit_field(FrameVector k) {
    return {Kind::Explicit, std::move(k)};
  }
  static SolitonField gradient_constant() { return {Kind::GradientConstant, {}}; }
};

inline FrameVector resolve_field(const SolitonField& field, const ParacontactStructure& P) {
  switch (field.kind) {
    case SolitonField::Kind::Zeta: return P.zeta();
    case SolitonField::Kind::Explicit: return field.components;
    case SolitonField::Kind::GradientConstant:
      return zero_vector(static_cast<int>(P.zeta().size()));
  }
  throw InternalInconsistency("unhandled soliton field kind");
}

// Left-hand side of the defining equation
//   L_K g + 2 sigma S + (2 Lambda - rho r) g = 0
// on frame pairs; the metric is a soliton for these parameters exactly when
// the result vanishes.
inline SquareMatrix rys_residual(const FrameManifold& M, const Connection& C,
                                 const CurvatureData& CD, const FrameVector& K,
                                 const SolitonParams& p) {
  if (!p.lambda) throw ValidationError("rys_residual requires lambda");
  const SquareMatrix lie = lie_derivative_metric(M, C, K).value();
  const Rational coeff = Rational(2) * (*p.lambda) - p.rho * CD.scalar();
  return lie + (Rational(2) * p.sigma) * CD.ricci() + coeff * M.metric();
}

// Contracting the defining equation twice with zeta kills the Lie term and
// leaves Lambda = rho r / 2 - sigma (n - 1); valid for any sigma because it
// never divides by it.
inline Rational solve_lambda_zeta(const FrameManifold& M, const CurvatureData& CD,
                                  const SolitonParams& p) {
  const Rational n1(M.dim() - 1);
  return p.rho * CD.scalar() / Rational(2) - p.sigma * n1;
}

// Closed-form consequences of a zeta-soliton on this class of manifolds,
// as functions of dimension alone:
//   r* = (n-1)/sigma + n(n-1)
//   Lambda* = -sigma (n-1) + rho (n-1)(1 + n sigma) / (2 sigma)
// together with the trichotomy that compares rho/sigma against
// 2 sigma - rho n. That inequality form is equivalent to the sign of
// Lambda* only when sigma > 0; for sigma < 0 it is reported but not used.
struct ZetaSolitonClosedForm {
  Rational r_star;
  Rational lambda_star;
  SolitonClass classification = SolitonClass::Steady;  // by sign of lambda*
  Rational inequality_lhs;                             // rho / sigma
  Rational inequality_rhs;                             // 2 sigma - rho n
  int inequality_relation = 0;                         // sign of lhs - rhs
  SolitonClass inequality_class = SolitonClass::Steady;
  bool inequality_sign_checked = false;                // true when sigma > 0
};

inline ZetaSolitonClosedForm zeta_soliton_closed_form(int n, const Rational& sigma,
                                                      const Rational& rho) {
  if (n < 3) throw BadDimension("dimension must be >= 3");
  if (sigma.is_zero())
    throw SigmaZero("zeta-soliton closed forms require sigma != 0");
  const Rational n1(n - 1);
  ZetaSolitonClosedForm out;
  out.r_star = n1 / sigma + Rational(n) * n1;
  out.lambda_star =
      -sigma * n1 + rho * n1 * (Rational(1) + Rational(n) * sigma) / (Rational(2) * sigma);
  out.classification = classify_by_lambda(out.lambda_star);
  out.inequality_lhs = rho / sigma;
  out.inequality_rhs = Rational(2) * sigma - rho * Rational(n);
  out.inequality_relation = (out.inequality_lhs - out.inequality_rhs).sign();
  out.inequality_class = out.inequality_relation > 0   ? SolitonClass::Expanding
                         : out.inequality_relation < 0 ? SolitonClass::Shrinking
                                                       : SolitonClass::Steady;
  out.inequality_sign_checked = sigma.sign() > 0;
  if (out.inequality_sign_checked && out.inequality_class != out.classification)
    throw InternalInconsistency("trichotomy disagrees with sign of lambda* for sigma > 0");
  return out;
}

// Full zeta-soliton analysis of a concrete model: the forced nu-Einstein
// Ricci form S = -(1/sigma)(Lambda - 1 - rho r / 2) g + (1/sigma) nu (x) nu,
// its residual against the computed Ricci tensor, and the comparison of the
// model's scalar curvature with the forced value r*.
struct ZetaSolitonAnalysis {
  Rational lambda_used;
  bool lambda_was_given = false;
  SquareMatrix predicted_ricci;
  SquareMatrix ricci_residual;
  bool ricci_form_holds = false;
  ZetaSolitonClosedForm closed_form;
  bool scalar_matches_r_star = false;
  SolitonClass classification = SolitonClass::Steady;

  ZetaSolitonAnalysis(int n) : predicted_ricci(n), ricci_residual(n) {}
};

inline ZetaSolitonAnalysis analyze_zeta_soliton(const FrameManifold& M, const CurvatureData& CD,
                                                const ParacontactStructure& P,
                                                const SolitonParams& p) {
  if (p.sigma.is_zero()) throw SigmaZero("zeta-soliton analysis requires sigma != 0");
  const int n = M.dim();
  ZetaSolitonAnalysis out(n);
  out.lambda_was_given = p.lambda.has_value();
  out.lambda_used = p.lambda ? *p.lambda : solve_lambda_zeta(M, CD, p);
  out.classification = classify_by_lambda(out.lambda_used);

  const Rational inv_sigma = p.sigma.reciprocal();
  const Rational gcoeff =
      -inv_sigma * (out.lambda_used - Rational(1) - p.rho * CD.scalar() / Rational(2));
  const FrameVector& nu = P.nu();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      out.predicted_ricci.at(i, j) =
          gcoeff * M.metric().at(i, j) +
          inv_sigma * nu[static_cast<size_t>(i)] * nu[static_cast<size_t>(j)];
  out.ricci_residual = CD.ricci() - out.predicted_ricci;
  out.ricci_form_holds = out.ricci_residual.is_zero();

  out.closed_form = zeta_soliton_closed_form(n, p.sigma, p.rho);
  out.scalar_matches_r_star = CD.scalar() == out.closed_form.r_star;
  return out;
}

// Lambda forced by constant scalar curvature (r = n(n-1)) for any soliton
// field: Lambda = rho n(n-1)/2 - sigma (n-1). The same value reappears for
// gradient solitons with constant potential.
inline Rational lambda_constant_scalar(int n, const Rational& sigma, const Rational& rho) {
  if (n < 3) throw BadDimension("dimension must be >= 3");
  const Rational n1(n - 1);
  return rho * Rational(n) * n1 / Rational(2) - sigma * n1;
}

// Endomorphism form of the gradient equation with constant potential:
// sigma Q + (Lambda - rho r / 2) Id. Zero exactly when the metric is a
// gradient soliton with v constant.
inline SquareMatrix gradient_rys_residual(const FrameManifold& M, const CurvatureData& CD,
                                          const SolitonParams& p) {
  if (!p.lambda) throw ValidationError("gradient_rys_residual requires lambda");
  const int n = M.dim();
  const Rational coeff = *p.lambda - p.rho * CD.scalar() / Rational(2);
  return p.sigma * CD.ricci_operator() + coeff * SquareMatrix::identity(n);
}

// Lambda that zeroes the zeta-contraction of the gradient equation:
// Lambda = rho r / 2 - sigma S(zeta, zeta) / g(zeta, zeta).
inline Rational solve_gradient_lambda(const FrameManifold& M, const CurvatureData& CD,
                                      const ParacontactStructure& P, const Rational& sigma,
                                      const Rational& rho) {
  const Rational gz = M.inner(P.zeta(), P.zeta());
  if (gz.is_zero()) throw ValidationError("solve_gradient_lambda: zeta is null");
  const Rational sz = pairing(CD.ricci(), P.zeta(), P.zeta());
  return rho * CD.scalar() / Rational(2) - sigma * (sz / gz);
}

// Potential derivatives forced on a gradient soliton:
//   zeta(v) = [(r - n(n-1)) / (n-1)] {2(n-1) rho - sigma (5n-13)/(n-1)}
//   F(v)    = -(r - n(n-1)) {3 rho - sigma (5n-13)/(n-1)^2} nu(F)
//             - (rho/2) F(r)
// reported as the nu-coefficient and the F(r)-coefficient. The contraction
// step behind these divides by n - 3, so n >= 4 is required. Constant r
// forces r = n(n-1) and hence a constant potential (trivial soliton).
struct GradientPotential {
  Rational zeta_v;
  Rational nu_coefficient;
  Rational fr_coefficient;
  bool trivial = false;
};

inline GradientPotential gradient_potential_derivatives(int n, const Rational& sigma,
                                                        const Rational& rho, const Rational& r) {
  if (n < 4)
    throw BadDimension("potential derivative formulas require dimension >= 4");
  const Rational n1(n - 1);
  const Rational excess = r - Rational(n) * n1;
  const Rational five13(5 * n - 13);
  GradientPotential out;
  out.zeta_v = excess / n1 * (Rational(2) * n1 * rho - sigma * five13 / n1);
  out.nu_coefficient = -excess * (Rational(3) * rho - sigma * five13 / (n1 * n1));
  out.fr_coefficient = -rho / Rational(2);
  out.trivial = excess.is_zero();
  return out;
}

// One special-case row: fixed (sigma, rho) with the Lambda the closed form
// gives, next to the independently stated value and behavior the row is
// checked against. Stated and computed sides are both kept; the *_matches
// flags record the comparison without normalizing either side.
struct SpecialCaseRow {
  std::string label;
  std::string family;
  Rational sigma;
  Rational rho;
  bool gradient = false;
  Rational computed_lambda;
  Rational stated_lambda;
  bool value_matches = false;
  SolitonClass computed_class = SolitonClass::Steady;
  std::string stated_class;
  bool class_matches = false;
};

inline std::vector<SpecialCaseRow> special_case_table(int n) {
  if (n < 3) throw BadDimension("dimension must be >= 3");
  const Rational n1(n - 1);
  auto make_row = [&](std::string label, std::string family, Rational sigma, Rational rho,
                      bool gradient, Rational stated_lambda, std::string stated_class) {
    SpecialCaseRow row;
    row.label = std::move(label);
    row.family = std::move(family);
    row.sigma = sigma;
    row.rho = rho;
    row.gradient = gradient;
    row.computed_lambda = lambda_constant_scalar(n, sigma, rho);
    row.stated_lambda = std::move(stated_lambda);
    row.value_matches = row.computed_lambda == row.stated_lambda;
    row.computed_class = classify_by_lambda(row.computed_lambda);
    row.stated_class = std::move(stated_class);
    row.class_matches = to_string(row.computed_class) == row.stated_class;
    return row;
  };
  std::vector<SpecialCaseRow> rows;
  rows.push_back(make_row("3.2", "Ricci soliton", Rational(1), Rational(0), false, -n1,
                          "shrinking"));
  rows.push_back(make_row("3.3", "Yamabe soliton", Rational(0), Rational(1), false,
                          Rational(n) * n1 / Rational(2), "shrinking"));
  rows.push_back(make_row("3.4", "Einstein soliton", Rational(1), Rational(-1), false,
                          -(Rational(n) * Rational(n) - Rational(1)) / Rational(2), "shrinking"));
  rows.push_back(make_row("4.3", "gradient Ricci soliton", Rational(1), Rational(0), true, -n1,
                          "shrinking"));
  rows.push_back(make_row("4.4", "gradient Einstein soliton", Rational(1), Rational(-1), true,
                          -n1 * Rational(n + 2) / Rational(2), "shrinking"));
  return rows;
}

// End-to-end evaluation used by the command layer: resolve the field and
// lambda, form the residual, classify.
struct SolitonVerdict {
  SquareMatrix residual;
  bool satisfied = false;
  Rational lambda_used;
  bool lambda_was_given = false;
  SolitonClass classification = SolitonClass::Steady;
  std::vector<std::string> notes;

  explicit SolitonVerdict(int n) : residual(n) {}
};

inline SolitonVerdict evaluate_soliton(const FrameManifold& M, const Connection& C,
                                       const CurvatureData& CD, const ParacontactStructure& P,
                                       const SolitonField& field, const SolitonParams& p) {
  SolitonVerdict out(M.dim());
  SolitonParams used = p;
  out.lambda_was_given = p.lambda.has_value();
  if (!used.lambda) {
    switch (field.kind) {
      case SolitonField::Kind::Zeta:
        used.lambda = solve_lambda_zeta(M, CD, p);
        out.notes.push_back("lambda solved from the zeta contraction");
        break;
      case SolitonField::Kind::GradientConstant:
        used.lambda = solve_gradient_lambda(M, CD, P, p.sigma, p.rho);
        out.notes.push_back("lambda solved from the gradient zeta contraction");
        break;
      case SolitonField::Kind::Explicit:
        throw ValidationError("explicit soliton fields require lambda");
    }
  }
  out.lambda_used = *used.lambda;
  out.classification = classify_by_lambda(out.lambda_used);
  if (field.kind == SolitonField::Kind::GradientConstant) {
    const SquareMatrix endo = gradient_rys_residual(M, CD, used);
    // report in metric form for uniformity: residual_{ij} = g_{ik} endo^k_j * 2
    SquareMatrix lowered(M.dim());
    for (int i = 0; i < M.dim(); ++i)
      for (int j = 0; j < M.dim(); ++j) {
        Rational s;
        for (int k = 0; k < M.dim(); ++k) {
          if (M.metric().at(i, k).is_zero() || endo.at(k, j).is_zero()) continue;
          s += M.metric().at(i, k) * endo.at(k, j);
        }
        lowered.at(i, j) = Rational(2) * s;
      }
    out.residual = lowered;
    out.notes.push_back("gradient form with constant potential; residual is twice the "
                        "lowered endomorphism residual");
  } else {
    out.residual = rys_residual(M, C, CD, resolve_field(field, P), used);
  }
  out.satisfied = out.residual.is_zero();
  return out;
}

}  // namespace lpkrys
