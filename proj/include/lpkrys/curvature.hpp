// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <utility>
#include <vector>

#include "lpkrys/connection.hpp"
#include "lpkrys/errors.hpp"
#include "lpkrys/frame.hpp"
#include "lpkrys/linalg.hpp"
#include "lpkrys/tensor.hpp"

namespace lpkrys {

// R(e_i, e_j) e_k = R_{ijk}^l e_l for the constant-coefficient connection:
// R_{ijk}^l = Gamma_{jk}^m Gamma_{im}^l - Gamma_{ik}^m Gamma_{jm}^l
//           - c_{ij}^m Gamma_{mk}^l.
// Sign convention: R(X, Y)Z = nabla_X nabla_Y Z - nabla_Y nabla_X Z
// - nabla_{[X,Y]} Z.
inline MultiTensor riemann_curvature(const FrameManifold& M, const Connection& C) {
  const int n = M.dim();
  MultiTensor R(n, {Variance::Lower, Variance::Lower, Variance::Lower, Variance::Upper});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;  // antisymmetric slots, diagonal vanishes
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          Rational sum;
          for (int m = 0; m < n; ++m) {
            if (!C.gamma(j, k, m).is_zero() && !C.gamma(i, m, l).is_zero())
              sum += C.gamma(j, k, m) * C.gamma(i, m, l);
            if (!C.gamma(i, k, m).is_zero() && !C.gamma(j, m, l).is_zero())
              sum -= C.gamma(i, k, m) * C.gamma(j, m, l);
            if (!M.bracket_constant(i, j, m).is_zero() && !C.gamma(m, k, l).is_zero())
              sum -= M.bracket_constant(i, j, m) * C.gamma(m, k, l);
          }
          R.at(i, j, k, l) = sum;
        }
    }
  R.declare_antisymmetric(0, 1);
  return R;
}

// Curvature summary of a model: Riemann tensor, Ricci tensor S_{jk} =
// R_{ijk}^i (contraction over the first slot), scalar curvature r =
// g^{jk} S_{jk}, and the Ricci operator Q^k_j = g^{ki} S_{ij} with
// S(X, Y) = g(QX, Y).
class CurvatureData {
 public:
  CurvatureData(const FrameManifold& M, MultiTensor riemann)
      : riemann_(std::move(riemann)), ricci_(M.dim()), ricci_operator_(M.dim()) {
    const int n = M.dim();
    if (riemann_.dim() != n || riemann_.rank() != 4)
      throw DimensionMismatch("curvature tensor has the wrong shape");
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Rational s;
        for (int i = 0; i < n; ++i) s += riemann_.at(i, j, k, i);
        ricci_.at(j, k) = s;
      }
    if (!ricci_.is_symmetric())
      throw InternalInconsistency("Ricci tensor of a Levi-Civita connection must be symmetric");
    const SquareMatrix& ginv = M.metric_inverse();
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        if (ginv.at(j, k).is_zero() || ricci_.at(j, k).is_zero()) continue;
        scalar_ += ginv.at(j, k) * ricci_.at(j, k);
      }
    for (int k = 0; k < n; ++k)
      for (int j = 0; j < n; ++j) {
        Rational q;
        for (int i = 0; i < n; ++i) {
          if (ginv.at(k, i).is_zero() || ricci_.at(i, j).is_zero()) continue;
          q += ginv.at(k, i) * ricci_.at(i, j);
        }
        ricci_operator_.at(k, j) = q;
      }
  }

  int dim() const { return ricci_.order(); }
  const MultiTensor& riemann() const { return riemann_; }
  const SquareMatrix& ricci() const { return ricci_; }
  const Rational& scalar() const { return scalar_; }
  const SquareMatrix& ricci_operator() const { return ricci_operator_; }

  // R(x, y) z by multilinearity.
  FrameVector apply(const FrameVector& x, const FrameVector& y, const FrameVector& z) const {
    const int n = dim();
    if (static_cast<int>(x.size()) != n || static_cast<int>(y.size()) != n ||
        static_cast<int>(z.size()) != n)
      throw DimensionMismatch("curvature apply: vector length does not match dimension");
    FrameVector out(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
      if (x[static_cast<size_t>(i)].is_zero()) continue;
      for (int j = 0; j < n; ++j) {
        if (y[static_cast<size_t>(j)].is_zero()) continue;
        const Rational xy = x[static_cast<size_t>(i)] * y[static_cast<size_t>(j)];
        for (int k = 0; k < n; ++k) {
          if (z[static_cast<size_t>(k)].is_zero()) continue;
          const Rational f = xy * z[static_cast<size_t>(k)];
          for (int l = 0; l < n; ++l) {
            if (riemann_.at(i, j, k, l).is_zero()) continue;
            out[static_cast<size_t>(l)] += f * riemann_.at(i, j, k, l);
          }
        }
      }
    }
    return out;
  }

 private:
  MultiTensor riemann_;
  SquareMatrix ricci_;
  Rational scalar_;
  SquareMatrix ricci_operator_;
};

inline CurvatureData ricci_data(const FrameManifold& M, const Connection& C) {
  return CurvatureData(M, riemann_curvature(M, C));
}

// First Bianchi: R(X,Y)Z + R(Y,Z)X + R(Z,X)Y = 0 on frame triples.
inline bool first_bianchi_holds(const MultiTensor& R) {
  const int n = R.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          Rational s = R.at(i, j, k, l);
          s += R.at(j, k, i, l);
          s += R.at(k, i, j, l);
          if (!s.is_zero()) return false;
        }
  return true;
}

// Second Bianchi: cyclic sum over (i, j, k) of (nabla_{e_i} R)_{jk} vanishes.
inline bool second_bianchi_holds(const FrameManifold& M, const Connection& C,
                                 const MultiTensor& R) {
  const int n = M.dim();
  std::vector<MultiTensor> dR;
  dR.reserve(static_cast<size_t>(n));
  for (int d = 0; d < n; ++d) dR.push_back(covariant_derivative_tensor(C, d, R));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int w = 0; w < n; ++w)
          for (int l = 0; l < n; ++l) {
            Rational s = dR[static_cast<size_t>(i)].at(j, k, w, l);
            s += dR[static_cast<size_t>(j)].at(k, i, w, l);
            s += dR[static_cast<size_t>(k)].at(i, j, w, l);
            if (!s.is_zero()) return false;
          }
  return true;
}

// g(R(X,Y)Z, W) = -g(R(X,Y)W, Z), entry-wise on the frame.
inline bool curvature_metric_skew(const FrameManifold& M, const MultiTensor& R) {
  const int n = M.dim();
  const SquareMatrix& g = M.metric();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int w = 0; w < n; ++w) {
          Rational s;
          for (int l = 0; l < n; ++l) {
            if (!R.at(i, j, k, l).is_zero()) s += R.at(i, j, k, l) * g.at(l, w);
            if (!R.at(i, j, w, l).is_zero()) s += R.at(i, j, w, l) * g.at(l, k);
          }
          if (!s.is_zero()) return false;
        }
  return true;
}

}  // namespace lpkrys
