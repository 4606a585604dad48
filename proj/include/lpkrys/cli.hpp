// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lpkrys/report.hpp"
#include "lpkrys/soliton.hpp"
#include "lpkrys/specdoc.hpp"
#include "lpkrys/version.hpp"

namespace lpkrys {

namespace cli_detail {

inline ManifoldSpecDocument load_doc(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_spec(buf.str());
}

// Colors only the tail verdict line; all other output is plain ASCII so
// that piped and redirected output is byte-deterministic.
inline std::string colorize_verdict(std::string text, bool color) {
  if (!color) return text;
  const std::string pass_tail = "verdict: pass\n";
  const std::string fail_tail = "verdict: FAIL\n";
  if (text.size() >= pass_tail.size() &&
      text.compare(text.size() - pass_tail.size(), pass_tail.size(), pass_tail) == 0)
    return text.substr(0, text.size() - pass_tail.size()) + "verdict: \033[32mpass\033[0m\n";
  if (text.size() >= fail_tail.size() &&
      text.compare(text.size() - fail_tail.size(), fail_tail.size(), fail_tail) == 0)
    return text.substr(0, text.size() - fail_tail.size()) + "verdict: \033[31mFAIL\033[0m\n";
  return text;
}

inline int emit_report(const ManifoldSpecDocument& doc, const SectionSet& sections,
                       const std::string& format, std::ostream& out, bool color) {
  const ReportResult r = run_report(doc, sections);
  if (format == "structured")
    out << structured_report_text(r);
  else
    out << colorize_verdict(r.text, color);
  return r.exit_code();
}

inline void render_theorems(int n, const Rational& sigma, const Rational& rho,
                            std::ostream& out) {
  out << kToolName << " " << kVersion << " closed forms at n = " << n
      << ", sigma = " << sigma.str() << ", rho = " << rho.str() << "\n";
  const Rational lam = lambda_constant_scalar(n, sigma, rho);
  out << "  constant-scalar-curvature soliton: lambda = " << lam.str() << " ("
      << to_string(classify_by_lambda(lam)) << ")\n";
  out << "  (the gradient form with constant potential solves to the same lambda)\n";
  if (!sigma.is_zero()) {
    const ZetaSolitonClosedForm cf = zeta_soliton_closed_form(n, sigma, rho);
    out << "  zeta-soliton forced scalar curvature: r* = " << cf.r_star.str() << "\n";
    out << "  zeta-soliton constant: lambda* = " << cf.lambda_star.str() << " ("
        << to_string(cf.classification) << ")\n";
    out << "  trichotomy: rho/sigma = " << cf.inequality_lhs.str() << " "
        << (cf.inequality_relation > 0 ? ">" : cf.inequality_relation < 0 ? "<" : "=")
        << " 2 sigma - rho n = " << cf.inequality_rhs.str() << " -> "
        << to_string(cf.inequality_class)
        << (cf.inequality_sign_checked ? "" : " (sign form not validated for sigma <= 0)")
        << "\n";
  } else {
    out << "  zeta-soliton closed forms: unavailable for sigma = 0\n";
  }
}

inline void render_corollaries(int n, std::ostream& out) {
  out << kToolName << " " << kVersion << " special cases at n = " << n << "\n";
  for (const auto& row : special_case_table(n)) {
    out << "  " << row.label << " " << row.family << ": sigma = " << row.sigma.str()
        << ", rho = " << row.rho.str()
        << ", lambda = " << row.computed_lambda.str() << " ("
        << to_string(row.computed_class) << ")";
    if (row.value_matches && row.class_matches)
      out << " -- matches the stated value and behavior";
    if (!row.value_matches)
      out << " -- stated value " << row.stated_lambda.str() << " DIFFERS";
    if (!row.class_matches)
      out << " -- stated behavior \"" << row.stated_class << "\" DIFFERS";
    out << "\n";
  }
}

}  // namespace cli_detail

// Entry point shared by the binary and the tests. args excludes the program
// name. Exit codes: 0 all requested checks pass, 1 at least one check
// failed, 2 input or usage error.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
                   bool color = false) {
  using cli_detail::emit_report;
  using cli_detail::load_doc;

  CLI::App app{std::string(kToolName) + " -- exact frame-geometry and soliton checker"};
  app.require_subcommand(1);

  std::string spec_path;
  std::string format = "text";
  std::string sigma_text, rho_text, lambda_text;
  bool solve_flag = false;
  int dim_arg = 0;
  std::string out_path;

  CLI::App* c_validate = app.add_subcommand("validate", "parse a spec and run structure checks");
  c_validate->add_option("spec", spec_path, "spec file")->required();

  CLI::App* c_connection = app.add_subcommand("connection", "Levi-Civita connection table");
  c_connection->add_option("spec", spec_path, "spec file")->required();

  CLI::App* c_curvature = app.add_subcommand("curvature", "Riemann curvature table");
  c_curvature->add_option("spec", spec_path, "spec file")->required();

  CLI::App* c_ricci = app.add_subcommand("ricci", "Ricci tensor, scalar curvature, Ricci operator");
  c_ricci->add_option("spec", spec_path, "spec file")->required();

  CLI::App* c_classify = app.add_subcommand("classify", "Einstein / nu-Einstein classification");
  c_classify->add_option("spec", spec_path, "spec file")->required();

  CLI::App* c_soliton = app.add_subcommand("soliton", "evaluate the soliton equation");
  c_soliton->add_option("spec", spec_path, "spec file")->required();
  CLI::Option* opt_sigma = c_soliton->add_option("--sigma", sigma_text, "sigma as p/q");
  CLI::Option* opt_rho = c_soliton->add_option("--rho", rho_text, "rho as p/q");
  CLI::Option* opt_lambda = c_soliton->add_option("--lambda", lambda_text, "lambda as p/q");
  CLI::Option* opt_solve = c_soliton->add_flag("--solve", solve_flag, "solve for lambda");
  opt_sigma->needs(opt_rho);
  opt_rho->needs(opt_sigma);
  opt_lambda->excludes(opt_solve);

  CLI::App* c_gradient = app.add_subcommand("gradient", "gradient soliton with constant potential");
  c_gradient->add_option("spec", spec_path, "spec file")->required();
  c_gradient->add_option("--sigma", sigma_text, "sigma as p/q")->required();
  c_gradient->add_option("--rho", rho_text, "rho as p/q")->required();

  CLI::App* c_theorems = app.add_subcommand("theorems", "closed-form soliton constants");
  c_theorems->add_option("--n", dim_arg, "dimension")->required();
  c_theorems->add_option("--sigma", sigma_text, "sigma as p/q")->required();
  c_theorems->add_option("--rho", rho_text, "rho as p/q")->required();

  CLI::App* c_corollaries = app.add_subcommand("corollaries", "special-case soliton table");
  c_corollaries->add_option("--n", dim_arg, "dimension")->required();

  CLI::App* c_example = app.add_subcommand("example", "emit a built-in example spec");
  c_example->add_option("--n", dim_arg, "odd dimension >= 3")->required();
  c_example->add_option("--out", out_path, "write to a file instead of stdout");

  CLI::App* c_report = app.add_subcommand("report", "full verification report");
  c_report->add_option("spec", spec_path, "spec file")->required();
  c_report->add_option("--format", format, "text or structured")
      ->check(CLI::IsMember({"text", "structured"}));

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back(kToolName);
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(c_validate))
      return emit_report(load_doc(spec_path), SectionSet::only_structure(), "text", out, color);
    if (app.got_subcommand(c_connection))
      return emit_report(load_doc(spec_path), SectionSet::only_connection(), "text", out, color);
    if (app.got_subcommand(c_curvature))
      return emit_report(load_doc(spec_path), SectionSet::only_curvature(), "text", out, color);
    if (app.got_subcommand(c_ricci))
      return emit_report(load_doc(spec_path), SectionSet::only_ricci(), "text", out, color);
    if (app.got_subcommand(c_classify))
      return emit_report(load_doc(spec_path), SectionSet::only_classification(), "text", out,
                         color);

    if (app.got_subcommand(c_soliton)) {
      ManifoldSpecDocument doc = load_doc(spec_path);
      SolitonSpec ss;
      if (doc.soliton) ss = *doc.soliton;
      const bool have_flags = opt_sigma->count() > 0;
      if (!doc.soliton && !have_flags)
        throw ValidationError(
            "no soliton parameters: the spec has no soliton block and none were given");
      if (have_flags) {
        ss.params.sigma = Rational::parse(sigma_text);
        ss.params.rho = Rational::parse(rho_text);
        if (opt_lambda->count() == 0) ss.params.lambda.reset();
      }
      if (opt_lambda->count() > 0) ss.params.lambda = Rational::parse(lambda_text);
      if (solve_flag) ss.params.lambda.reset();
      doc.soliton = ss;
      return emit_report(doc, SectionSet::only_soliton(), "text", out, color);
    }

    if (app.got_subcommand(c_gradient)) {
      ManifoldSpecDocument doc = load_doc(spec_path);
      SolitonSpec ss;
      ss.params.sigma = Rational::parse(sigma_text);
      ss.params.rho = Rational::parse(rho_text);
      ss.params.lambda.reset();
      ss.field = SolitonField::gradient_constant();
      doc.soliton = ss;
      return emit_report(doc, SectionSet::only_soliton(), "text", out, color);
    }

    if (app.got_subcommand(c_theorems)) {
      cli_detail::render_theorems(dim_arg, Rational::parse(sigma_text),
                                  Rational::parse(rho_text), out);
      return 0;
    }

    if (app.got_subcommand(c_corollaries)) {
      cli_detail::render_corollaries(dim_arg, out);
      return 0;
    }

    if (app.got_subcommand(c_example)) {
      const std::string text = serialize(builtin_example(dim_arg));
      if (out_path.empty()) {
        out << text;
      } else {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) throw ParseError("cannot write file: " + out_path);
        f << text;
        if (!f) throw ParseError("write failed: " + out_path);
      }
      return 0;
    }

    if (app.got_subcommand(c_report))
      return emit_report(load_doc(spec_path), SectionSet::all(), format, out, color);

    err << "error: no subcommand\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace lpkrys
