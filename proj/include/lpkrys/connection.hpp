// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <utility>
#include <vector>

#include "lpkrys/errors.hpp"
#include "lpkrys/frame.hpp"
#include "lpkrys/linalg.hpp"
#include "lpkrys/tensor.hpp"

namespace lpkrys {

// Levi-Civita connection coefficients Gamma_{ij}^k of a homogeneous frame
// model: nabla_{e_i} e_j = Gamma_{ij}^k e_k with constant coefficients.
class Connection {
 public:
  explicit Connection(MultiTensor gamma) : gamma_(std::move(gamma)) {
    if (gamma_.rank() != 3) throw DimensionMismatch("connection coefficients must have rank 3");
  }

  int dim() const { return gamma_.dim(); }
  const MultiTensor& coefficients() const { return gamma_; }
  const Rational& gamma(int i, int j, int k) const { return gamma_.at(i, j, k); }

  // nabla_x y for constant-coefficient fields: x^i y^j Gamma_{ij}^k e_k.
  FrameVector derivative(const FrameVector& x, const FrameVector& y) const {
    const int n = dim();
    if (static_cast<int>(x.size()) != n || static_cast<int>(y.size()) != n)
      throw DimensionMismatch("covariant derivative: vector length does not match dimension");
    FrameVector out(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
      if (x[static_cast<size_t>(i)].is_zero()) continue;
      for (int j = 0; j < n; ++j) {
        if (y[static_cast<size_t>(j)].is_zero()) continue;
        const Rational f = x[static_cast<size_t>(i)] * y[static_cast<size_t>(j)];
        for (int k = 0; k < n; ++k) {
          const Rational& g = gamma_.at(i, j, k);
          if (g.is_zero()) continue;
          out[static_cast<size_t>(k)] += f * g;
        }
      }
    }
    return out;
  }

 private:
  MultiTensor gamma_;
};

// Koszul formula specialized to constant-component data (all e_i g(..) terms
// vanish): Gamma_{ij}^k = 1/2 g^{kl} (c_{ij}^m g_{ml} - c_{il}^m g_{mj}
// - c_{jl}^m g_{mi}). Torsion-freeness and metric compatibility follow and
// are rechecked by the test suite, not trusted.
inline Connection koszul_connection(const FrameManifold& M) {
  const int n = M.dim();
  const SquareMatrix& g = M.metric();
  const SquareMatrix& ginv = M.metric_inverse();
  const Rational half(1, 2);

  MultiTensor gamma(n, {Variance::Lower, Variance::Lower, Variance::Upper});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Rational sum;
        for (int l = 0; l < n; ++l) {
          if (ginv.at(k, l).is_zero()) continue;
          Rational inner;
          for (int m = 0; m < n; ++m) {
            const Rational& c_ij = M.bracket_constant(i, j, m);
            if (!c_ij.is_zero() && !g.at(m, l).is_zero()) inner += c_ij * g.at(m, l);
            const Rational& c_il = M.bracket_constant(i, l, m);
            if (!c_il.is_zero() && !g.at(m, j).is_zero()) inner -= c_il * g.at(m, j);
            const Rational& c_jl = M.bracket_constant(j, l, m);
            if (!c_jl.is_zero() && !g.at(m, i).is_zero()) inner -= c_jl * g.at(m, i);
          }
          if (!inner.is_zero()) sum += ginv.at(k, l) * inner;
        }
        gamma.at(i, j, k) = half * sum;
      }
  return Connection(std::move(gamma));
}

// Gamma_{ij}^k - Gamma_{ji}^k = c_{ij}^k, entry-wise.
inline bool is_torsion_free(const FrameManifold& M, const Connection& C) {
  const int n = M.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (C.gamma(i, j, k) - C.gamma(j, i, k) != M.bracket_constant(i, j, k)) return false;
  return true;
}

// Gamma_{ij}^m g_{mk} + Gamma_{ik}^m g_{mj} = 0, entry-wise (nabla g = 0 for
// constant components).
inline bool is_metric_compatible(const FrameManifold& M, const Connection& C) {
  const int n = M.dim();
  const SquareMatrix& g = M.metric();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Rational sum;
        for (int m = 0; m < n; ++m) {
          if (!C.gamma(i, j, m).is_zero()) sum += C.gamma(i, j, m) * g.at(m, k);
          if (!C.gamma(i, k, m).is_zero()) sum += C.gamma(i, k, m) * g.at(m, j);
        }
        if (!sum.is_zero()) return false;
      }
  return true;
}

// (nabla_x T) applied to frame fields, for an endomorphism T with constant
// matrix: (nabla_x T) e_j = nabla_x (T e_j) - T (nabla_x e_j). Returns the
// resulting endomorphism matrix in the column convention T e_j = T^k_j e_k.
inline SquareMatrix covariant_derivative_endomorphism(const Connection& C, const FrameVector& x,
                                                      const SquareMatrix& T) {
  const int n = C.dim();
  if (T.order() != n) throw DimensionMismatch("endomorphism order does not match dimension");
  SquareMatrix out(n);
  for (int j = 0; j < n; ++j) {
    const FrameVector ej = basis_vector(n, j);
    FrameVector column = subtract(C.derivative(x, T.apply(ej)), T.apply(C.derivative(x, ej)));
    for (int k = 0; k < n; ++k) out.at(k, j) = column[static_cast<size_t>(k)];
  }
  return out;
}

// Frame components of nabla_{e_d} T for a general tensor: one +Gamma
// contraction per upper slot, one -Gamma contraction per lower slot. With
// constant components the partial-derivative term is absent.
inline MultiTensor covariant_derivative_tensor(const Connection& C, int d, const MultiTensor& T) {
  const int n = C.dim();
  if (T.dim() != n) throw DimensionMismatch("tensor dimension does not match connection");
  if (d < 0 || d >= n) throw DimensionMismatch("derivative direction out of range");
  MultiTensor out(n, T.variance());
  const int r = T.rank();
  out.for_each_index([&](const std::vector<int>& idx) {
    Rational sum;
    std::vector<int> probe = idx;
    for (int slot = 0; slot < r; ++slot) {
      const int fixed = idx[static_cast<size_t>(slot)];
      for (int m = 0; m < n; ++m) {
        probe[static_cast<size_t>(slot)] = m;
        const Rational& tv = T.at_index(probe);
        if (tv.is_zero()) continue;
        if (T.variance()[static_cast<size_t>(slot)] == Variance::Upper) {
          // (nabla T)^{..k..} picks up +Gamma_{d m}^{k} T^{..m..}
          if (!C.gamma(d, m, fixed).is_zero()) sum += C.gamma(d, m, fixed) * tv;
        } else {
          // lower slot s: -Gamma_{d s}^{m} T_{..m..}
          if (!C.gamma(d, fixed, m).is_zero()) sum -= C.gamma(d, fixed, m) * tv;
        }
      }
      probe[static_cast<size_t>(slot)] = fixed;
    }
    out.at_index(idx) = sum;
  });
  return out;
}

}  // namespace lpkrys
