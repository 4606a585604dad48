// SPDX-License-Identifier: Apache-2.0
#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "lpkrys/errors.hpp"
#include "lpkrys/linalg.hpp"
#include "test_helpers.hpp"

using namespace lpkrys;
using lpkrys::testing::random_rational;

namespace {

SquareMatrix random_matrix(std::mt19937& rng, int n) {
  SquareMatrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = random_rational(rng, 6, 4);
  return m;
}

SquareMatrix random_invertible(std::mt19937& rng, int n) {
  for (;;) {
    SquareMatrix m = random_matrix(rng, n);
    if (!m.determinant().is_zero()) return m;
  }
}

SquareMatrix random_integer_invertible(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> entry(-3, 3);
  for (;;) {
    SquareMatrix m(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m.at(i, j) = Rational(entry(rng));
    if (!m.determinant().is_zero()) return m;
  }
}

}  // namespace

TEST_CASE("vector helpers", "[linalg]") {
  REQUIRE(is_zero(zero_vector(4)));
  const FrameVector e1 = basis_vector(3, 0);
  REQUIRE(e1[0] == Rational(1));
  REQUIRE(e1[1].is_zero());
  REQUIRE_FALSE(is_zero(e1));

  const FrameVector a = {Rational(1), Rational(2)};
  const FrameVector b = {Rational(3), Rational(-1)};
  const FrameVector sum = {Rational(4), Rational(1)};
  const FrameVector diff = {Rational(-2), Rational(3)};
  const FrameVector half_a = {Rational(1, 2), Rational(1)};
  const FrameVector neg_a = {Rational(-1), Rational(-2)};
  REQUIRE(add(a, b) == sum);
  REQUIRE(subtract(a, b) == diff);
  REQUIRE(scale(Rational(1, 2), a) == half_a);
  REQUIRE(negate(a) == neg_a);
  REQUIRE_THROWS_AS(add(a, zero_vector(3)), DimensionMismatch);
}

TEST_CASE("matrix basics", "[linalg]") {
  REQUIRE_THROWS_AS(SquareMatrix(0), DimensionMismatch);
  const SquareMatrix id = SquareMatrix::identity(3);
  REQUIRE(id.at(0, 0) == Rational(1));
  REQUIRE(id.at(0, 1).is_zero());
  REQUIRE(id.is_symmetric());
  REQUIRE_FALSE(id.is_zero());
  REQUIRE(SquareMatrix(2).is_zero());

  const SquareMatrix d = SquareMatrix::diagonal({Rational(2), Rational(-3)});
  REQUIRE(d.at(0, 0) == Rational(2));
  REQUIRE(d.at(1, 1) == Rational(-3));
  REQUIRE(d.order() == 2);

  SquareMatrix m(2);
  m.at(0, 1) = Rational(7);
  REQUIRE(m.transpose().at(1, 0) == Rational(7));
  REQUIRE_FALSE(m.is_symmetric());
  REQUIRE(m.transpose().transpose() == m);
}

TEST_CASE("matrix arithmetic and application", "[linalg]") {
  SquareMatrix a(2), b(2);
  a.at(0, 0) = Rational(1); a.at(0, 1) = Rational(2);
  a.at(1, 0) = Rational(3); a.at(1, 1) = Rational(4);
  b.at(0, 1) = Rational(1); b.at(1, 0) = Rational(1);

  const SquareMatrix p = a * b;
  REQUIRE(p.at(0, 0) == Rational(2));
  REQUIRE(p.at(0, 1) == Rational(1));
  REQUIRE(p.at(1, 0) == Rational(4));
  REQUIRE(p.at(1, 1) == Rational(3));
  REQUIRE_FALSE(a * b == b * a);

  REQUIRE((a + b) - b == a);
  REQUIRE((Rational(2) * a).at(1, 1) == Rational(8));

  // apply uses (M v)^i = M_{ij} v^j, so basis vectors extract columns
  const FrameVector col0 = {Rational(1), Rational(3)};
  const FrameVector col1 = {Rational(2), Rational(4)};
  REQUIRE(a.apply(basis_vector(2, 0)) == col0);
  REQUIRE(a.apply(basis_vector(2, 1)) == col1);
  REQUIRE_THROWS_AS(a.apply(zero_vector(3)), DimensionMismatch);
}

TEST_CASE("determinant", "[linalg]") {
  REQUIRE(SquareMatrix::diagonal({Rational(2), Rational(3), Rational(-1)}).determinant() ==
          Rational(-6));
  SquareMatrix m(3);
  const long rows[3][3] = {{1, 2, 3}, {4, 5, 6}, {7, 8, 10}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m.at(i, j) = Rational(rows[i][j]);
  REQUIRE(m.determinant() == Rational(-3));

  SquareMatrix singular(2);
  singular.at(0, 0) = Rational(1); singular.at(0, 1) = Rational(2);
  singular.at(1, 0) = Rational(2); singular.at(1, 1) = Rational(4);
  REQUIRE(singular.determinant().is_zero());

  std::mt19937 rng(5150);
  for (int trial = 0; trial < 25; ++trial) {
    const SquareMatrix x = random_matrix(rng, 3), y = random_matrix(rng, 3);
    REQUIRE((x * y).determinant() == x.determinant() * y.determinant());
  }
}

TEST_CASE("inverse", "[linalg]") {
  const SquareMatrix d = SquareMatrix::diagonal({Rational(2), Rational(1, 2)});
  const SquareMatrix dinv = d.invert();
  REQUIRE(dinv.at(0, 0) == Rational(1, 2));
  REQUIRE(dinv.at(1, 1) == Rational(2));

  std::mt19937 rng(6021);
  for (int trial = 0; trial < 20; ++trial) {
    const SquareMatrix m = random_invertible(rng, 4);
    REQUIRE(m * m.invert() == SquareMatrix::identity(4));
    REQUIRE(m.invert() * m == SquareMatrix::identity(4));
  }

  SquareMatrix singular(2);
  singular.at(0, 0) = Rational(1); singular.at(0, 1) = Rational(1);
  singular.at(1, 0) = Rational(1); singular.at(1, 1) = Rational(1);
  REQUIRE_THROWS_AS(singular.invert(), SingularMatrix);
}

TEST_CASE("signature on explicit forms", "[linalg]") {
  const Inertia lorentz3{2, 1, 0};
  const Inertia definite4{4, 0, 0};
  const Inertia degenerate3{0, 0, 3};
  const Inertia split2{1, 1, 0};
  REQUIRE(SquareMatrix::diagonal({Rational(1), Rational(1), Rational(-1)}).signature() ==
          lorentz3);
  REQUIRE(SquareMatrix::identity(4).signature() == definite4);
  REQUIRE(SquareMatrix(3).signature() == degenerate3);

  // hyperbolic plane: zero diagonal, handled by the off-diagonal congruence step
  SquareMatrix h(2);
  h.at(0, 1) = Rational(1);
  h.at(1, 0) = Rational(1);
  REQUIRE(h.signature() == split2);

  SquareMatrix asym(2);
  asym.at(0, 1) = Rational(1);
  REQUIRE_THROWS_AS(asym.signature(), NotSymmetric);
}

TEST_CASE("signature is congruence-invariant", "[linalg]") {
  std::mt19937 rng(31415);
  for (int trial = 0; trial < 30; ++trial) {
    SquareMatrix w = random_matrix(rng, 4);
    w = w + w.transpose();  // symmetric
    const SquareMatrix p = random_integer_invertible(rng, 4);
    const SquareMatrix congruent = p.transpose() * w * p;
    REQUIRE(congruent.signature() == w.signature());
  }
}

TEST_CASE("pairing", "[linalg]") {
  const SquareMatrix g = SquareMatrix::diagonal({Rational(1), Rational(1), Rational(-1)});
  const FrameVector x = {Rational(1), Rational(2), Rational(3)};
  const FrameVector y = {Rational(1), Rational(0), Rational(1)};
  REQUIRE(pairing(g, x, y) == Rational(-2));
  REQUIRE(pairing(SquareMatrix::identity(3), x, x) == Rational(14));
  REQUIRE_THROWS_AS(pairing(g, x, zero_vector(2)), DimensionMismatch);
  REQUIRE_THROWS_AS(pairing(g, zero_vector(2), zero_vector(2)), DimensionMismatch);
}
