// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <json.hpp>

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lpkrys/errors.hpp"
#include "lpkrys/frame.hpp"
#include "lpkrys/linalg.hpp"
#include "lpkrys/rational.hpp"
#include "lpkrys/soliton.hpp"
#include "lpkrys/structure.hpp"

namespace lpkrys {

using json = nlohmann::ordered_json;

struct SolitonSpec {
  SolitonParams params;
  SolitonField field;
};

// A fully parsed and structurally validated input document. Axiom-level
// properties (the structure being almost paracontact, LP-Kenmotsu, and so
// on) are deliberately not enforced here; they are what the checks report.
struct ManifoldSpecDocument {
  std::string name;
  FrameManifold manifold;
  ParacontactStructure structure;
  std::optional<SolitonSpec> soliton;

  int dimension() const { return manifold.dim(); }
};

namespace detail {

inline void require_object(const json& v, const std::string& where) {
  if (!v.is_object()) throw SchemaError(where + ": expected an object");
}

inline void check_keys(const json& obj, const std::string& where,
                       const std::vector<std::string>& allowed,
                       const std::vector<std::string>& required) {
  for (const auto& item : obj.items()) {
    bool known = false;
    for (const auto& k : allowed)
      if (item.key() == k) { known = true; break; }
    if (!known) throw SchemaError(where + ": unknown key \"" + item.key() + "\"");
  }
  for (const auto& k : required)
    if (!obj.contains(k)) throw SchemaError(where + ": missing key \"" + k + "\"");
}

inline Rational parse_rational(const json& v, const std::string& where) {
  if (v.is_number_unsigned() &&
      v.get<unsigned long long>() >
          static_cast<unsigned long long>(std::numeric_limits<long long>::max()))
    throw SchemaError(where + ": integer too large, use the string form");
  if (v.is_number_integer()) return Rational(static_cast<long>(v.get<long long>()));
  if (v.is_string()) {
    try {
      return Rational::parse(v.get<std::string>());
    } catch (const ParseError& e) {
      throw SchemaError(where + ": " + e.what());
    }
  }
  throw SchemaError(where + ": expected a rational as a string \"p/q\" or an integer");
}

inline int parse_index(const json& v, const std::string& where, int n) {
  if (!v.is_number_integer())
    throw SchemaError(where + ": expected a 1-based integer index");
  const long long raw = v.get<long long>();
  if (raw < 1 || raw > n)
    throw SchemaError(where + ": index " + std::to_string(raw) + " outside [1, " +
                      std::to_string(n) + "]");
  return static_cast<int>(raw);
}

inline SquareMatrix parse_matrix(const json& v, const std::string& where, int n) {
  if (!v.is_array() || static_cast<int>(v.size()) != n)
    throw SchemaError(where + ": expected an array of " + std::to_string(n) + " rows");
  SquareMatrix m(n);
  for (int i = 0; i < n; ++i) {
    const json& row = v[static_cast<size_t>(i)];
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      throw SchemaError(where + "[" + std::to_string(i + 1) + "]: expected " +
                        std::to_string(n) + " entries");
    for (int j = 0; j < n; ++j)
      m.at(i, j) = parse_rational(row[static_cast<size_t>(j)],
                                  where + "[" + std::to_string(i + 1) + "][" +
                                      std::to_string(j + 1) + "]");
  }
  return m;
}

inline FrameVector parse_vector(const json& v, const std::string& where, int n) {
  if (!v.is_array() || static_cast<int>(v.size()) != n)
    throw SchemaError(where + ": expected an array of " + std::to_string(n) + " entries");
  FrameVector out(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j)
    out[static_cast<size_t>(j)] =
        parse_rational(v[static_cast<size_t>(j)], where + "[" + std::to_string(j + 1) + "]");
  return out;
}

}  // namespace detail

// Parses and validates a document from text. Errors are layered: ParseError
// for text that is not a document at all, SchemaError for missing/unknown/
// ill-typed fields and malformed indices, ValidationError for well-formed
// data violating the model invariants (signature, Jacobi, nu mismatch).
inline ManifoldSpecDocument parse_spec(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("document: ") + e.what());
  }
  detail::require_object(doc, "document");
  detail::check_keys(doc, "document",
                     {"name", "dimension", "metric", "brackets", "phi", "zeta", "nu", "soliton"},
                     {"dimension", "metric", "brackets", "phi", "zeta"});

  std::string name = "unnamed";
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) throw SchemaError("name: expected a string");
    name = doc["name"].get<std::string>();
  }

  if (!doc["dimension"].is_number_integer())
    throw SchemaError("dimension: expected an integer");
  const long long rawn = doc["dimension"].get<long long>();
  if (rawn < 1 || rawn > 64)
    throw SchemaError("dimension: expected an integer in [1, 64]");
  const int n = static_cast<int>(rawn);

  SquareMatrix metric = detail::parse_matrix(doc["metric"], "metric", n);

  if (!doc["brackets"].is_array()) throw SchemaError("brackets: expected an array");
  std::vector<BracketTerm> terms;
  int bracket_pos = 0;
  for (const json& entry : doc["brackets"]) {
    ++bracket_pos;
    const std::string where = "brackets[" + std::to_string(bracket_pos) + "]";
    if (!entry.is_array() || entry.size() != 4)
      throw SchemaError(where + ": expected [i, j, k, value]");
    BracketTerm t;
    t.i = detail::parse_index(entry[0], where + ".i", n) - 1;
    t.j = detail::parse_index(entry[1], where + ".j", n) - 1;
    t.k = detail::parse_index(entry[2], where + ".k", n) - 1;
    if (t.i >= t.j) throw SchemaError(where + ": i < j required");
    t.value = detail::parse_rational(entry[3], where + ".value");
    terms.push_back(std::move(t));
  }

  SquareMatrix phi = detail::parse_matrix(doc["phi"], "phi", n);
  FrameVector zeta = detail::parse_vector(doc["zeta"], "zeta", n);

  FrameManifold manifold(std::move(metric), std::move(terms));
  ParacontactStructure structure(manifold, std::move(phi), std::move(zeta));

  if (doc.contains("nu")) {
    const FrameVector given = detail::parse_vector(doc["nu"], "nu", n);
    for (int j = 0; j < n; ++j)
      if (given[static_cast<size_t>(j)] != structure.nu()[static_cast<size_t>(j)])
        throw ValidationError("nu[" + std::to_string(j + 1) +
                              "] does not match g(e_" + std::to_string(j + 1) + ", zeta): given " +
                              given[static_cast<size_t>(j)].str() + ", derived " +
                              structure.nu()[static_cast<size_t>(j)].str());
  }

  std::optional<SolitonSpec> soliton;
  if (doc.contains("soliton")) {
    const json& s = doc["soliton"];
    detail::require_object(s, "soliton");
    detail::check_keys(s, "soliton", {"sigma", "rho", "lambda", "field"},
                       {"sigma", "rho", "field"});
    SolitonSpec spec;
    spec.params.sigma = detail::parse_rational(s["sigma"], "soliton.sigma");
    spec.params.rho = detail::parse_rational(s["rho"], "soliton.rho");
    if (s.contains("lambda"))
      spec.params.lambda = detail::parse_rational(s["lambda"], "soliton.lambda");
    const json& f = s["field"];
    if (f.is_string()) {
      const std::string kind = f.get<std::string>();
      if (kind == "zeta") spec.field = SolitonField::zeta();
      else if (kind == "gradient-constant") spec.field = SolitonField::gradient_constant();
      else
        throw SchemaError("soliton.field: expected \"zeta\", \"gradient-constant\", or an array "
                          "of components");
    } else if (f.is_array()) {
      spec.field = SolitonField::explicit_field(detail::parse_vector(f, "soliton.field", n));
    } else {
      throw SchemaError("soliton.field: expected \"zeta\", \"gradient-constant\", or an array "
                        "of components");
    }
    soliton = std::move(spec);
  }

  return ManifoldSpecDocument{std::move(name), std::move(manifold), std::move(structure),
                              std::move(soliton)};
}

// Canonical serialization: fixed key order, rationals as canonical strings,
// brackets sorted with i < j and zero terms dropped, nu always included in
// its derived form. Re-parsing and re-serializing is the identity on the
// output of this function.
inline std::string serialize(const ManifoldSpecDocument& doc) {
  const int n = doc.dimension();
  auto matrix_json = [n](const SquareMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < n; ++i) {
      json row = json::array();
      for (int j = 0; j < n; ++j) row.push_back(m.at(i, j).str());
      rows.push_back(std::move(row));
    }
    return rows;
  };
  auto vector_json = [n](const FrameVector& v) {
    json out = json::array();
    for (int j = 0; j < n; ++j) out.push_back(v[static_cast<size_t>(j)].str());
    return out;
  };

  json out;
  out["name"] = doc.name;
  out["dimension"] = n;
  out["metric"] = matrix_json(doc.manifold.metric());
  json brackets = json::array();
  for (const auto& t : doc.manifold.bracket_terms())
    brackets.push_back(json::array({t.i + 1, t.j + 1, t.k + 1, t.value.str()}));
  out["brackets"] = std::move(brackets);
  out["phi"] = matrix_json(doc.structure.phi());
  out["zeta"] = vector_json(doc.structure.zeta());
  out["nu"] = vector_json(doc.structure.nu());
  if (doc.soliton) {
    json s;
    s["sigma"] = doc.soliton->params.sigma.str();
    s["rho"] = doc.soliton->params.rho.str();
    if (doc.soliton->params.lambda) s["lambda"] = doc.soliton->params.lambda->str();
    switch (doc.soliton->field.kind) {
      case SolitonField::Kind::Zeta: s["field"] = "zeta"; break;
      case SolitonField::Kind::GradientConstant: s["field"] = "gradient-constant"; break;
      case SolitonField::Kind::Explicit: s["field"] = vector_json(doc.soliton->field.components);
    }
    out["soliton"] = std::move(s);
  }
  return out.dump(2) + "\n";
}

// The standard odd-dimensional model family: an orthonormal-style frame
// with g = diag(1, .., 1, -1), brackets [e_i, e_n] = -e_i for i < n,
// zeta = e_n, and phi swapping the pairs (e_1, e_2), (e_3, e_4), ... with a
// sign: phi e_{2k-1} = -e_{2k}, phi e_{2k} = -e_{2k-1}, phi e_n = 0.
inline ManifoldSpecDocument builtin_example(int n) {
  if (n < 3 || n % 2 == 0)
    throw BadDimension("builtin examples exist for odd n >= 3, got " + std::to_string(n));
  std::vector<Rational> diag(static_cast<size_t>(n), Rational(1));
  diag[static_cast<size_t>(n - 1)] = Rational(-1);
  SquareMatrix metric = SquareMatrix::diagonal(diag);

  std::vector<BracketTerm> terms;
  for (int i = 0; i + 1 < n; ++i) terms.push_back({i, n - 1, i, Rational(-1)});

  SquareMatrix phi(n);
  for (int k = 0; 2 * k + 1 < n - 1; ++k) {
    phi.at(2 * k + 1, 2 * k) = Rational(-1);  // phi e_{2k+1} = -e_{2k+2} (1-based)
    phi.at(2 * k, 2 * k + 1) = Rational(-1);
  }

  FrameVector zeta = basis_vector(n, n - 1);

  FrameManifold manifold(std::move(metric), std::move(terms));
  ParacontactStructure structure(manifold, std::move(phi), std::move(zeta));
  return ManifoldSpecDocument{"lpk-example-" + std::to_string(n), std::move(manifold),
                              std::move(structure), std::nullopt};
}

// FNV-1a, 64-bit. Reports carry this digest of the canonical serialization
// so a report can be tied to its exact input.
inline std::string fnv1a64_hex(std::string_view text) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : std::string_view(text)) {
    h ^= static_cast<std::uint64_t>(c);
    h *= 1099511628211ull;
  }
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<size_t>(i)] = digits[h & 0xf];
    h >>= 4;
  }
  return out;
}

inline std::string input_digest(const ManifoldSpecDocument& doc) {
  return "fnv1a64:" + fnv1a64_hex(serialize(doc));
}

}  // namespace lpkrys
