// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "lpkrys/connection.hpp"
#include "lpkrys/curvature.hpp"
#include "lpkrys/frame.hpp"
#include "lpkrys/linalg.hpp"
#include "lpkrys/rational.hpp"
#include "lpkrys/structure.hpp"

namespace lpkrys {

// Published reference tables for the standard 5-dimensional model, recorded
// independently of the computing code so the engine can be cross-checked
// against them. All indices here are 1-based, as printed.

// nabla_{e_i} e_j = sign * e_k.
struct ReferenceConnectionEntry {
  int i;
  int j;
  int k;
  int sign;
};

// R(e_i, e_j) e_k = sign * e_l. `misprint` marks the one entry whose printed
// right-hand side reads "-v_4" where every neighbouring entry follows the
// pattern -e_4; the comparison uses -e_4 and reports the suspicion.
struct ReferenceCurvatureEntry {
  int i;
  int j;
  int k;
  int l;
  int sign;
  bool misprint = false;
};

inline const std::vector<ReferenceConnectionEntry>& reference5_connection() {
  static const std::vector<ReferenceConnectionEntry> table = {
      {1, 1, 5, -1}, {2, 2, 5, -1}, {3, 3, 5, -1}, {4, 4, 5, -1},
      {1, 5, 1, -1}, {2, 5, 2, -1}, {3, 5, 3, -1}, {4, 5, 4, -1},
  };
  return table;
}

inline const std::vector<ReferenceCurvatureEntry>& reference5_curvature() {
  static const std::vector<ReferenceCurvatureEntry> table = {
      {1, 2, 1, 2, -1, false}, {1, 2, 2, 1, +1, false},
      {1, 3, 1, 3, -1, false}, {1, 3, 3, 1, +1, false},
      {1, 4, 1, 4, -1, true},  {1, 4, 4, 1, +1, false},
      {1, 5, 1, 5, -1, false}, {1, 5, 5, 1, -1, false},
      {2, 3, 2, 3, -1, false}, {2, 3, 3, 2, +1, false},
      {2, 4, 2, 4, -1, false}, {2, 4, 4, 2, +1, false},
      {2, 5, 2, 5, -1, false}, {2, 5, 5, 2, -1, false},
      {3, 4, 3, 4, -1, false}, {3, 4, 4, 3, +1, false},
      {3, 5, 3, 5, -1, false}, {3, 5, 5, 3, -1, false},
      {4, 5, 4, 5, -1, false}, {4, 5, 5, 4, -1, false},
  };
  return table;
}

inline const std::vector<Rational>& reference5_ricci_diagonal() {
  static const std::vector<Rational> diag = {Rational(4), Rational(4), Rational(4), Rational(4),
                                             Rational(-4)};
  return diag;
}

inline Rational reference5_scalar() { return Rational(20); }

inline const char* reference5_misprint_note() {
  return "the printed table gives R(e_1,e_4)e_1 = -v_4; the engine computes -e_4 and every "
         "matching entry of the table follows that pattern, so -v_4 is treated as a misprint "
         "for -e_4";
}

// Cross-check of computed data against the recorded tables. Entries are
// named so reports can render them; all comparisons are exact.
inline CheckReport reference5_cross_check(const FrameManifold& M, const Connection& C,
                                          const CurvatureData& CD) {
  if (M.dim() != 5) throw BadDimension("reference tables cover dimension 5 only");
  CheckReport report;

  {
    // every listed entry matches and everything unlisted vanishes
    MultiTensor expected(5, {Variance::Lower, Variance::Lower, Variance::Upper});
    for (const auto& t : reference5_connection())
      expected.at(t.i - 1, t.j - 1, t.k - 1) = Rational(t.sign);
    MultiTensor res(5, {Variance::Lower, Variance::Lower, Variance::Upper});
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j)
        for (int k = 0; k < 5; ++k)
          res.at(i, j, k) = C.gamma(i, j, k) - expected.at(i, j, k);
    report.entries.push_back(make_entry("reference-connection-table", "", res));
  }

  {
    MultiTensor expected(5, {Variance::Lower, Variance::Lower, Variance::Lower, Variance::Upper});
    for (const auto& t : reference5_curvature()) {
      expected.at(t.i - 1, t.j - 1, t.k - 1, t.l - 1) = Rational(t.sign);
      expected.at(t.j - 1, t.i - 1, t.k - 1, t.l - 1) = Rational(-t.sign);
    }
    const MultiTensor res = CD.riemann() - expected;
    CheckEntry e = make_entry("reference-curvature-table", "", res);
    e.note = reference5_misprint_note();
    report.entries.push_back(e);
  }

  {
    SquareMatrix expected = SquareMatrix::diagonal(reference5_ricci_diagonal());
    MultiTensor res(5, {Variance::Lower, Variance::Lower});
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) res.at(i, j) = CD.ricci().at(i, j) - expected.at(i, j);
    report.entries.push_back(make_entry("reference-ricci-table", "", res));
  }

  report.entries.push_back(make_entry("reference-scalar-curvature", "",
                                      scalar_tensor(5, CD.scalar() - reference5_scalar())));

  return report;
}

}  // namespace lpkrys
