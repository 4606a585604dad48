// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "lpkrys/connection.hpp"
#include "lpkrys/curvature.hpp"
#include "lpkrys/frame.hpp"
#include "lpkrys/lie.hpp"
#include "lpkrys/reference.hpp"
#include "lpkrys/soliton.hpp"
#include "lpkrys/specdoc.hpp"
#include "lpkrys/structure.hpp"
#include "lpkrys/version.hpp"

namespace lpkrys {

struct SectionSet {
  bool structure = false;
  bool connection = false;
  bool curvature = false;
  bool ricci = false;
  bool classification = false;
  bool soliton = false;
  bool theorems = false;

  static SectionSet all() { return {true, true, true, true, true, true, true}; }
  static SectionSet only_structure() { return {true, false, false, false, false, false, false}; }
  static SectionSet only_connection() { return {false, true, false, false, false, false, false}; }
  static SectionSet only_curvature() { return {false, false, true, false, false, false, false}; }
  static SectionSet only_ricci() { return {false, false, false, true, false, false, false}; }
  static SectionSet only_classification() {
    return {false, false, false, false, true, false, false};
  }
  static SectionSet only_soliton() { return {false, false, false, false, false, true, false}; }
  static SectionSet only_theorems() { return {false, false, false, false, false, false, true}; }
};

// A fully rendered verification run: the structured document, the plain-text
// rendering, and the verdict over every required check that was included.
struct ReportResult {
  json document;
  std::string text;
  bool verdict = true;
  int exit_code() const { return verdict ? 0 : 1; }
};

namespace report_detail {

inline std::string format_combination(const FrameVector& v) {
  std::string out;
  for (size_t k = 0; k < v.size(); ++k) {
    const Rational& c = v[k];
    if (c.is_zero()) continue;
    const bool negative = c.sign() < 0;
    const Rational mag = c.abs();
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (!(mag == Rational(1))) out += mag.str() + "*";
    out += "e" + std::to_string(k + 1);
  }
  return out.empty() ? "0" : out;
}

inline std::string format_witness(const std::vector<int>& w) {
  std::string out = "(";
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(w[i]);
  }
  return out + ")";
}

inline json check_json(const CheckEntry& e) {
  json j;
  j["name"] = e.name;
  if (!e.label.empty()) j["identity"] = e.label;
  j["required"] = e.required;
  j["passed"] = e.passed;
  if (!e.passed) {
    j["witness"] = e.witness;
    if (e.worst_value) j["value"] = e.worst_value->str();
    if (e.residual) {
      json nz = json::array();
      e.residual->for_each_index([&](const std::vector<int>& idx) {
        const Rational& v = e.residual->at_index(idx);
        if (v.is_zero()) return;
        json entry;
        json where = json::array();
        for (int i : idx) where.push_back(i + 1);
        entry["index"] = std::move(where);
        entry["value"] = v.str();
        nz.push_back(std::move(entry));
      });
      j["residual_nonzero"] = std::move(nz);
    }
  }
  if (!e.note.empty()) j["note"] = e.note;
  return j;
}

inline json matrix_json(const SquareMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.order(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.order(); ++j) row.push_back(m.at(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

inline void render_check_line(std::ostringstream& os, const CheckEntry& e) {
  const char* status = e.passed ? "pass" : (e.required ? "FAIL" : "fail");
  os << "  " << status << "  ";
  if (!e.label.empty()) os << e.label << "  ";
  os << e.name;
  if (!e.required) os << " [informational]";
  if (!e.passed) {
    os << "  witness " << format_witness(e.witness);
    if (e.worst_value) os << " value " << e.worst_value->str();
  }
  if (!e.note.empty()) os << "  (" << e.note << ")";
  os << "\n";
}

inline json soliton_class_json(SolitonClass c) { return std::string(to_string(c)); }

}  // namespace report_detail

inline ReportResult run_report(const ManifoldSpecDocument& doc, const SectionSet& sections) {
  using report_detail::check_json;
  using report_detail::format_combination;
  using report_detail::format_witness;
  using report_detail::matrix_json;
  using report_detail::render_check_line;

  const FrameManifold& M = doc.manifold;
  const ParacontactStructure& P = doc.structure;
  const int n = M.dim();
  const Connection C = koszul_connection(M);
  const CurvatureData CD = ricci_data(M, C);

  ReportResult result;
  std::ostringstream text;
  json& root = result.document;
  root["tool"] = kToolName;
  root["version"] = kVersion;
  {
    json input;
    input["name"] = doc.name;
    input["dimension"] = n;
    input["digest"] = input_digest(doc);
    root["input"] = std::move(input);
  }
  json sections_json;

  text << kToolName << " " << kVersion << " report\n";
  text << "input: " << doc.name << " (dimension " << n << ", digest " << input_digest(doc)
       << ")\n";
  if (doc.name.rfind("lpk-example-", 0) == 0)
    text << "convention: built-in examples pair frame vectors as phi e_{2k-1} = -e_{2k}, "
            "phi e_{2k} = -e_{2k-1}, with zeta the last frame vector\n";

  auto absorb = [&](const CheckReport& cr, json& arr, std::ostringstream& os) {
    for (const auto& e : cr.entries) {
      arr.push_back(check_json(e));
      render_check_line(os, e);
      if (e.required && !e.passed) result.verdict = false;
    }
  };

  const bool is_golden5 =
      n == 5 && !doc.soliton && serialize(doc) == serialize(builtin_example(5));

  std::vector<std::string> notes;

  if (sections.structure) {
    json sec;
    json checks = json::array();
    text << "\n[structure]\n";
    absorb(check_almost_paracontact(M, P), checks, text);
    {
      CheckReport kp = check_k_paracontact(M, C, P);
      for (auto& e : kp.entries) {
        e.required = false;
        e.note = "informational: this class of structures is not of Killing type";
      }
      absorb(kp, checks, text);
    }
    absorb(check_lp_kenmotsu(M, C, P), checks, text);
    absorb(check_curvature_identities(M, CD, P), checks, text);
    absorb(check_ricci_operator_lemma(M, C, CD, P), checks, text);
    sec["checks"] = std::move(checks);
    sections_json["structure"] = std::move(sec);
  }

  if (sections.connection) {
    json sec;
    json table = json::array();
    text << "\n[connection]\n";
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        FrameVector col(static_cast<size_t>(n));
        bool nonzero = false;
        for (int k = 0; k < n; ++k) {
          col[static_cast<size_t>(k)] = C.gamma(i, j, k);
          nonzero = nonzero || !C.gamma(i, j, k).is_zero();
        }
        if (!nonzero) continue;
        for (int k = 0; k < n; ++k) {
          if (C.gamma(i, j, k).is_zero()) continue;
          json row;
          row["i"] = i + 1;
          row["j"] = j + 1;
          row["k"] = k + 1;
          row["value"] = C.gamma(i, j, k).str();
          table.push_back(std::move(row));
        }
        text << "  nabla_{e" << (i + 1) << "} e" << (j + 1) << " = " << format_combination(col)
             << "\n";
      }
    const bool torsion = is_torsion_free(M, C);
    const bool compat = is_metric_compatible(M, C);
    if (!torsion || !compat) result.verdict = false;
    sec["table"] = std::move(table);
    sec["torsion_free"] = torsion;
    sec["metric_compatible"] = compat;
    text << "  torsion-free: " << (torsion ? "pass" : "FAIL") << "\n";
    text << "  metric-compatible: " << (compat ? "pass" : "FAIL") << "\n";
    sections_json["connection"] = std::move(sec);
  }

  if (sections.curvature) {
    json sec;
    json table = json::array();
    text << "\n[curvature]\n";
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          FrameVector comp(static_cast<size_t>(n));
          bool nonzero = false;
          for (int l = 0; l < n; ++l) {
            comp[static_cast<size_t>(l)] = CD.riemann().at(i, j, k, l);
            nonzero = nonzero || !comp[static_cast<size_t>(l)].is_zero();
          }
          if (!nonzero) continue;
          for (int l = 0; l < n; ++l) {
            if (comp[static_cast<size_t>(l)].is_zero()) continue;
            json row;
            row["i"] = i + 1;
            row["j"] = j + 1;
            row["k"] = k + 1;
            row["l"] = l + 1;
            row["value"] = comp[static_cast<size_t>(l)].str();
            table.push_back(std::move(row));
          }
          text << "  R(e" << (i + 1) << ",e" << (j + 1) << ")e" << (k + 1) << " = "
               << format_combination(comp) << "\n";
        }
    const bool bianchi1 = first_bianchi_holds(CD.riemann());
    const bool bianchi2 = second_bianchi_holds(M, C, CD.riemann());
    const bool skew = curvature_metric_skew(M, CD.riemann());
    if (!bianchi1 || !bianchi2 || !skew) result.verdict = false;
    sec["table"] = std::move(table);
    sec["first_bianchi"] = bianchi1;
    sec["second_bianchi"] = bianchi2;
    sec["metric_skew"] = skew;
    text << "  first-bianchi: " << (bianchi1 ? "pass" : "FAIL") << "\n";
    text << "  second-bianchi: " << (bianchi2 ? "pass" : "FAIL") << "\n";
    text << "  metric-skew: " << (skew ? "pass" : "FAIL") << "\n";
    sections_json["curvature"] = std::move(sec);
  }

  if (sections.ricci) {
    json sec;
    text << "\n[ricci]\n";
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j)
        if (!CD.ricci().at(i, j).is_zero())
          text << "  S(e" << (i + 1) << ",e" << (j + 1) << ") = " << CD.ricci().at(i, j).str()
               << "\n";
    text << "  scalar curvature r = " << CD.scalar().str() << "\n";
    sec["ricci"] = matrix_json(CD.ricci());
    sec["scalar"] = CD.scalar().str();
    sec["ricci_operator"] = matrix_json(CD.ricci_operator());
    sections_json["ricci"] = std::move(sec);
  }

  if (sections.classification) {
    json sec;
    text << "\n[classification]\n";
    const EinsteinClassification cls = classify_einstein(M, CD, P);
    if (!cls.decomposition_holds) result.verdict = false;
    sec["a"] = cls.a.str();
    sec["b"] = cls.b.str();
    sec["decomposition_holds"] = cls.decomposition_holds;
    sec["label"] = cls.label;
    sec["scalar"] = cls.scalar.str();
    sec["scalar_consistent"] = cls.scalar_consistent;
    text << "  S = a g + b nu (x) nu with a = " << cls.a.str() << ", b = " << cls.b.str()
         << ": " << (cls.decomposition_holds ? "holds" : "FAILS");
    if (!cls.decomposition_holds) {
      text << "  witness " << format_witness(cls.witness);
      sec["witness"] = cls.witness;
    }
    text << "\n  label: " << cls.label << "\n";
    text << "  scalar curvature r = " << cls.scalar.str() << (cls.scalar_consistent ? " = " : " != ")
         << "n(n-1)\n";
    sections_json["classification"] = std::move(sec);
  }

  if (sections.soliton && doc.soliton) {
    json sec;
    text << "\n[soliton]\n";
    const SolitonSpec& ss = *doc.soliton;
    const SolitonVerdict verdict = evaluate_soliton(M, C, CD, P, ss.field, ss.params);
    if (!verdict.satisfied) result.verdict = false;

    sec["sigma"] = ss.params.sigma.str();
    sec["rho"] = ss.params.rho.str();
    sec["lambda"] = verdict.lambda_used.str();
    sec["lambda_source"] = verdict.lambda_was_given ? "given" : "solved";
    switch (ss.field.kind) {
      case SolitonField::Kind::Zeta: sec["field"] = "zeta"; break;
      case SolitonField::Kind::GradientConstant: sec["field"] = "gradient-constant"; break;
      case SolitonField::Kind::Explicit: {
        json f = json::array();
        for (const auto& c : ss.field.components) f.push_back(c.str());
        sec["field"] = std::move(f);
        break;
      }
    }
    sec["classification"] = report_detail::soliton_class_json(verdict.classification);
    sec["satisfied"] = verdict.satisfied;
    sec["residual"] = matrix_json(verdict.residual);
    json vnotes = json::array();
    for (const auto& s : verdict.notes) vnotes.push_back(s);
    sec["notes"] = std::move(vnotes);

    std::string field_name = ss.field.kind == SolitonField::Kind::Zeta ? "zeta"
                             : ss.field.kind == SolitonField::Kind::GradientConstant
                                 ? "gradient-constant"
                                 : "explicit";
    text << "  field: " << field_name << ", sigma = " << ss.params.sigma.str()
         << ", rho = " << ss.params.rho.str() << ", lambda = " << verdict.lambda_used.str()
         << " (" << (verdict.lambda_was_given ? "given" : "solved") << ")\n";
    for (const auto& note : verdict.notes) text << "  note: " << note << "\n";
    text << "  classification: " << to_string(verdict.classification) << "\n";
    text << "  equation satisfied: " << (verdict.satisfied ? "pass" : "FAIL") << "\n";
    if (!verdict.satisfied) {
      for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
          if (!verdict.residual.at(i, j).is_zero())
            text << "  residual(e" << (i + 1) << ",e" << (j + 1)
                 << ") = " << verdict.residual.at(i, j).str() << "\n";
    }

    if (ss.field.kind == SolitonField::Kind::GradientConstant) {
      if (n >= 4) {
        const GradientPotential gp =
            gradient_potential_derivatives(n, ss.params.sigma, ss.params.rho, CD.scalar());
        json gj;
        gj["zeta_v"] = gp.zeta_v.str();
        gj["nu_coefficient"] = gp.nu_coefficient.str();
        gj["fr_coefficient"] = gp.fr_coefficient.str();
        gj["trivial"] = gp.trivial;
        sec["gradient_potential"] = std::move(gj);
        text << "  potential derivatives: zeta(v) = " << gp.zeta_v.str()
             << ", nu-coefficient of F(v) = " << gp.nu_coefficient.str()
             << ", F(r)-coefficient = " << gp.fr_coefficient.str()
             << ", trivial: " << (gp.trivial ? "yes" : "no") << "\n";
      } else {
        sec["gradient_potential"] = nullptr;
        text << "  potential derivatives: unavailable in dimension 3\n";
      }
    }

    if (ss.field.kind == SolitonField::Kind::Zeta) {
      if (!ss.params.sigma.is_zero()) {
        const ZetaSolitonAnalysis za = analyze_zeta_soliton(M, CD, P, ss.params);
        json zj;
        zj["ricci_form_holds"] = za.ricci_form_holds;
        zj["predicted_ricci"] = matrix_json(za.predicted_ricci);
        zj["r"] = CD.scalar().str();
        zj["r_star"] = za.closed_form.r_star.str();
        zj["scalar_matches_r_star"] = za.scalar_matches_r_star;
        zj["lambda_star"] = za.closed_form.lambda_star.str();
        zj["lambda_star_class"] =
            report_detail::soliton_class_json(za.closed_form.classification);
        sec["zeta_analysis"] = std::move(zj);
        text << "  forced Ricci form: " << (za.ricci_form_holds ? "holds" : "does not hold")
             << "; r = " << CD.scalar().str() << " vs r* = " << za.closed_form.r_star.str()
             << "; lambda* = " << za.closed_form.lambda_star.str() << " ("
             << to_string(za.closed_form.classification) << ")\n";
      } else {
        sec["zeta_analysis"] = nullptr;
        text << "  forced Ricci form: unavailable for sigma = 0\n";
      }
    }
    sections_json["soliton"] = std::move(sec);
  }

  if (sections.theorems) {
    json sec;
    text << "\n[theorems]\n";
    if (doc.soliton) {
      const SolitonParams& p = doc.soliton->params;
      const Rational lam = lambda_constant_scalar(n, p.sigma, p.rho);
      sec["constant_scalar_lambda"] = lam.str();
      sec["constant_scalar_class"] =
          report_detail::soliton_class_json(classify_by_lambda(lam));
      text << "  constant-scalar-curvature lambda = " << lam.str() << " ("
           << to_string(classify_by_lambda(lam)) << ") at sigma = " << p.sigma.str()
           << ", rho = " << p.rho.str() << "\n";
      if (!p.sigma.is_zero()) {
        const ZetaSolitonClosedForm cf = zeta_soliton_closed_form(n, p.sigma, p.rho);
        json zj;
        zj["r_star"] = cf.r_star.str();
        zj["lambda_star"] = cf.lambda_star.str();
        zj["class"] = report_detail::soliton_class_json(cf.classification);
        zj["inequality_lhs"] = cf.inequality_lhs.str();
        zj["inequality_rhs"] = cf.inequality_rhs.str();
        zj["inequality_relation"] =
            cf.inequality_relation > 0 ? ">" : cf.inequality_relation < 0 ? "<" : "=";
        sec["zeta_closed_form"] = std::move(zj);
        text << "  zeta-soliton closed form: r* = " << cf.r_star.str()
             << ", lambda* = " << cf.lambda_star.str() << " (" << to_string(cf.classification)
             << "), rho/sigma "
             << (cf.inequality_relation > 0 ? ">" : cf.inequality_relation < 0 ? "<" : "=")
             << " 2 sigma - rho n\n";
      }
    }
    json rows = json::array();
    text << "  special cases (n = " << n << "):\n";
    for (const auto& row : special_case_table(n)) {
      json rj;
      rj["label"] = row.label;
      rj["family"] = row.family;
      rj["sigma"] = row.sigma.str();
      rj["rho"] = row.rho.str();
      rj["gradient"] = row.gradient;
      rj["computed_lambda"] = row.computed_lambda.str();
      rj["stated_lambda"] = row.stated_lambda.str();
      rj["value_matches"] = row.value_matches;
      rj["computed_class"] = std::string(to_string(row.computed_class));
      rj["stated_class"] = row.stated_class;
      rj["class_matches"] = row.class_matches;
      rows.push_back(std::move(rj));
      text << "    " << row.label << " " << row.family << ": lambda = "
           << row.computed_lambda.str() << " (" << to_string(row.computed_class) << ")";
      if (!row.value_matches)
        text << " -- stated value " << row.stated_lambda.str() << " DIFFERS";
      if (!row.class_matches) text << " -- stated behavior \"" << row.stated_class
                                   << "\" DIFFERS";
      text << "\n";
      if (!row.value_matches)
        notes.push_back("special case " + row.label + ": stated lambda " +
                        row.stated_lambda.str() + " differs from computed " +
                        row.computed_lambda.str());
      if (!row.class_matches)
        notes.push_back("special case " + row.label + ": stated behavior \"" + row.stated_class +
                        "\" differs from computed \"" + std::string(to_string(row.computed_class)) +
                        "\"");
    }
    sec["special_cases"] = std::move(rows);
    sections_json["theorems"] = std::move(sec);
  }

  if (is_golden5 && (sections.connection || sections.curvature || sections.ricci)) {
    json sec;
    json checks = json::array();
    text << "\n[reference-check]\n";
    absorb(reference5_cross_check(M, C, CD), checks, text);
    sec["checks"] = std::move(checks);
    sections_json["reference_check"] = std::move(sec);
    notes.push_back(reference5_misprint_note());
  }

  if (!notes.empty()) {
    json ns = json::array();
    text << "\n[notes]\n";
    for (const auto& s : notes) {
      ns.push_back(s);
      text << "  - " << s << "\n";
    }
    sections_json["notes"] = std::move(ns);
  }

  root["sections"] = std::move(sections_json);
  root["verdict"] = result.verdict ? "pass" : "fail";
  text << "\nverdict: " << (result.verdict ? "pass" : "FAIL") << "\n";
  result.text = text.str();
  return result;
}

inline std::string structured_report_text(const ReportResult& r) {
  return r.document.dump(2) + "\n";
}

}  // namespace lpkrys
