// SPDX-License-Identifier: Apache-2.0
#include <catch2/catch_amalgamated.hpp>

#include "lpkrys/curvature.hpp"
#include "lpkrys/errors.hpp"
#include "lpkrys/frame.hpp"
#include "lpkrys/reference.hpp"
#include "lpkrys/specdoc.hpp"

using namespace lpkrys;

TEST_CASE("curvature of the 3-dim model", "[curvature]") {
  const FrameManifold& m = builtin_example(3).manifold;
  const Connection c = koszul_connection(m);
  const MultiTensor r = riemann_curvature(m, c);

  // R(e_1,e_2)e_1 = -e_2, R(e_1,e_2)e_2 = e_1,
  // R(e_1,e_3)e_1 = -e_3, R(e_1,e_3)e_3 = -e_1,
  // R(e_2,e_3)e_2 = -e_3, R(e_2,e_3)e_3 = -e_2
  REQUIRE(r.at(0, 1, 0, 1) == Rational(-1));
  REQUIRE(r.at(0, 1, 1, 0) == Rational(1));
  REQUIRE(r.at(0, 2, 0, 2) == Rational(-1));
  REQUIRE(r.at(0, 2, 2, 0) == Rational(-1));
  REQUIRE(r.at(1, 2, 1, 2) == Rational(-1));
  REQUIRE(r.at(1, 2, 2, 1) == Rational(-1));

  // antisymmetry in the first pair is declared and holds
  REQUIRE_FALSE(r.declared_symmetries().empty());
  REQUIRE(r.antisymmetric_in(0, 1));

  int nonzero = 0;
  r.for_each_index([&](const std::vector<int>& idx) {
    if (!r.at_index(idx).is_zero()) ++nonzero;
  });
  REQUIRE(nonzero == 12);  // six components and their antisymmetric mirrors
}

TEST_CASE("ricci data of the builtin models", "[curvature]") {
  {
    const FrameManifold& m = builtin_example(3).manifold;
    const CurvatureData cd = ricci_data(m, koszul_connection(m));
    const std::vector<Rational> diag = {Rational(2), Rational(2), Rational(-2)};
    REQUIRE(cd.ricci() == SquareMatrix::diagonal(diag));
    REQUIRE(cd.scalar() == Rational(6));
    REQUIRE(cd.ricci_operator() == Rational(2) * SquareMatrix::identity(3));
  }
  {
    const FrameManifold& m = builtin_example(5).manifold;
    const CurvatureData cd = ricci_data(m, koszul_connection(m));
    const std::vector<Rational> diag = {Rational(4), Rational(4), Rational(4), Rational(4),
                                        Rational(-4)};
    REQUIRE(cd.ricci() == SquareMatrix::diagonal(diag));
    REQUIRE(cd.scalar() == Rational(20));
    REQUIRE(cd.ricci_operator() == Rational(4) * SquareMatrix::identity(5));
  }
}

TEST_CASE("apply is multilinear in frame arguments", "[curvature]") {
  const FrameManifold& m = builtin_example(5).manifold;
  const CurvatureData cd = ricci_data(m, koszul_connection(m));
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j)
      for (int k = 0; k < 5; ++k) {
        const FrameVector out =
            cd.apply(basis_vector(5, i), basis_vector(5, j), basis_vector(5, k));
        for (int l = 0; l < 5; ++l)
          REQUIRE(out[static_cast<size_t>(l)] == cd.riemann().at(i, j, k, l));
      }
  REQUIRE_THROWS_AS(
      cd.apply(zero_vector(4), zero_vector(5), zero_vector(5)), DimensionMismatch);
}

TEST_CASE("curvature identities hold on builtin models", "[curvature]") {
  for (int n : {3, 5, 7}) {
    const FrameManifold& m = builtin_example(n).manifold;
    const Connection c = koszul_connection(m);
    const MultiTensor r = riemann_curvature(m, c);
    REQUIRE(first_bianchi_holds(r));
    REQUIRE(second_bianchi_holds(m, c, r));
    REQUIRE(curvature_metric_skew(m, r));
  }
}

TEST_CASE("reference tables match the 5-dim model", "[curvature]") {
  const FrameManifold& m = builtin_example(5).manifold;
  const Connection c = koszul_connection(m);
  const CurvatureData cd = ricci_data(m, c);
  const CheckReport report = reference5_cross_check(m, c, cd);
  REQUIRE(report.entries.size() == 4);
  for (const auto& e : report.entries) REQUIRE(e.passed);
  const CheckEntry* curv = report.find("reference-curvature-table");
  REQUIRE(curv != nullptr);
  REQUIRE_FALSE(curv->note.empty());  // carries the misprint remark

  // exactly one table entry is flagged as the suspected misprint
  int flagged = 0;
  for (const auto& t : reference5_curvature())
    if (t.misprint) ++flagged;
  REQUIRE(flagged == 1);

  REQUIRE_THROWS_AS(
      reference5_cross_check(builtin_example(3).manifold,
                             koszul_connection(builtin_example(3).manifold),
                             ricci_data(builtin_example(3).manifold,
                                        koszul_connection(builtin_example(3).manifold))),
      BadDimension);
}

TEST_CASE("CurvatureData validates its input", "[curvature]") {
  const FrameManifold& m = builtin_example(3).manifold;
  const MultiTensor wrong_rank(3, {Variance::Lower, Variance::Lower});
  REQUIRE_THROWS_AS(CurvatureData(m, wrong_rank), DimensionMismatch);

  // a tensor whose Ricci contraction is not symmetric is rejected
  MultiTensor bad(3, {Variance::Lower, Variance::Lower, Variance::Lower, Variance::Upper});
  bad.at(0, 1, 2, 0) = Rational(1);
  REQUIRE_THROWS_AS(CurvatureData(m, bad), InternalInconsistency);
}
