// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "lpkrys/connection.hpp"
#include "lpkrys/errors.hpp"
#include "lpkrys/frame.hpp"
#include "lpkrys/linalg.hpp"
#include "lpkrys/tensor.hpp"

namespace lpkrys {

// (L_K g) on frame pairs, computed along two independent routes:
//   via_connection: g(nabla_{e_i} K, e_j) + g(e_i, nabla_{e_j} K)
//   via_brackets:   -g([K, e_i], e_j) - g(e_i, [K, e_j])
// The K g(e_i, e_j) term vanishes because all components are constant.
// Both are kept; agreement is enforced at construction, so either member is
// safe to use downstream.
struct MetricLieDerivative {
  SquareMatrix via_connection;
  SquareMatrix via_brackets;
  const SquareMatrix& value() const { return via_connection; }
};

inline MetricLieDerivative lie_derivative_metric(const FrameManifold& M, const Connection& C,
                                                 const FrameVector& K) {
  const int n = M.dim();
  if (static_cast<int>(K.size()) != n)
    throw DimensionMismatch("lie_derivative_metric: field length does not match dimension");
  SquareMatrix a(n);
  SquareMatrix b(n);
  for (int i = 0; i < n; ++i) {
    const FrameVector ei = basis_vector(n, i);
    const FrameVector dKi = C.derivative(ei, K);
    const FrameVector bKi = M.lie_bracket(K, ei);
    for (int j = 0; j < n; ++j) {
      const FrameVector ej = basis_vector(n, j);
      a.at(i, j) = M.inner(dKi, ej) + M.inner(ei, C.derivative(ej, K));
      b.at(i, j) = -M.inner(bKi, ej) - M.inner(ei, M.lie_bracket(K, ej));
    }
  }
  if (!(a == b))
    throw InternalInconsistency("L_K g: connection route and bracket route disagree");
  return MetricLieDerivative{a, b};
}

// (L_K nabla)(e_i, e_j) through the Yano identity
//   2 g((L_K nabla)(E, F), G) = (nabla_E L_K g)(F, G) + (nabla_F L_K g)(E, G)
//                             - (nabla_G L_K g)(E, F),
// where for a constant-component bilinear form T,
//   (nabla_E T)(F, G) = -T(nabla_E F, G) - T(F, nabla_E G).
// Result is a (1,2) tensor, symmetric in its two lower slots.
inline MultiTensor lie_derivative_connection(const FrameManifold& M, const Connection& C,
                                             const FrameVector& K) {
  const int n = M.dim();
  const MetricLieDerivative lg = lie_derivative_metric(M, C, K);
  const SquareMatrix& T = lg.value();

  // nabla_{e_d} T as a matrix for each direction d.
  std::vector<SquareMatrix> dT;
  dT.reserve(static_cast<size_t>(n));
  for (int d = 0; d < n; ++d) {
    SquareMatrix m(n);
    for (int f = 0; f < n; ++f)
      for (int g = 0; g < n; ++g) {
        Rational s;
        for (int m2 = 0; m2 < n; ++m2) {
          if (!C.gamma(d, f, m2).is_zero()) s -= C.gamma(d, f, m2) * T.at(m2, g);
          if (!C.gamma(d, g, m2).is_zero()) s -= C.gamma(d, g, m2) * T.at(f, m2);
        }
        m.at(f, g) = s;
      }
    dT.push_back(std::move(m));
  }

  const SquareMatrix& ginv = M.metric_inverse();
  MultiTensor out(n, {Variance::Lower, Variance::Lower, Variance::Upper});
  const Rational half(1, 2);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      // rhs_w = half of the Yano right-hand side at (e_i, e_j; e_w)
      for (int k = 0; k < n; ++k) {
        Rational comp;
        for (int w = 0; w < n; ++w) {
          if (ginv.at(k, w).is_zero()) continue;
          const Rational rhs = dT[static_cast<size_t>(i)].at(j, w) +
                               dT[static_cast<size_t>(j)].at(i, w) -
                               dT[static_cast<size_t>(w)].at(i, j);
          if (rhs.is_zero()) continue;
          comp += ginv.at(k, w) * half * rhs;
        }
        out.at(i, j, k) = comp;
      }
    }
  out.declare_symmetric(0, 1);
  return out;
}

}  // namespace lpkrys
