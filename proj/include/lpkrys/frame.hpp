// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "lpkrys/errors.hpp"
#include "lpkrys/linalg.hpp"
#include "lpkrys/rational.hpp"
#include "lpkrys/tensor.hpp"

namespace lpkrys {

// One sparse structure-constant term: [e_i, e_j] contains value * e_k.
// Stored with i < j only; the j < i half is implied by antisymmetry.
struct BracketTerm {
  int i = 0;
  int j = 0;
  int k = 0;
  Rational value;
  friend bool operator==(const BracketTerm&, const BracketTerm&) = default;
};

// Homogeneous pseudo-Riemannian model: a frame e_1 .. e_n with constant
// metric components and constant structure constants. Construction
// validates everything a downstream computation relies on:
//   - order >= 3, metric symmetric with Lorentzian signature (n-1, 1, 0)
//   - bracket terms in range, i < j, no duplicate (i, j, k) slots
//   - the Jacobi identity for the induced bracket
// Instances are immutable afterwards.
class FrameManifold {
 public:
  FrameManifold(SquareMatrix metric, std::vector<BracketTerm> brackets)
      : metric_(std::move(metric)),
        metric_inverse_(metric_.order()),
        terms_(std::move(brackets)),
        c_(metric_.order(), {Variance::Lower, Variance::Lower, Variance::Upper}) {
    const int n = metric_.order();
    if (n < 3) throw ValidationError("dimension must be >= 3, got " + std::to_string(n));
    if (!metric_.is_symmetric()) throw ValidationError("metric is not symmetric");
    const Inertia sig = metric_.signature();
    if (sig.positives != n - 1 || sig.negatives != 1)
      throw ValidationError("metric signature is (" + std::to_string(sig.positives) + ", " +
                            std::to_string(sig.negatives) + ", " + std::to_string(sig.zeros) +
                            "), expected Lorentzian (" + std::to_string(n - 1) + ", 1, 0)");
    metric_inverse_ = metric_.invert();

    for (const auto& t : terms_) {
      if (t.i < 0 || t.j < 0 || t.k < 0 || t.i >= n || t.j >= n || t.k >= n)
        throw ValidationError("bracket term index out of range");
      if (t.i >= t.j) throw ValidationError("bracket terms require i < j");
    }
    std::sort(terms_.begin(), terms_.end(), [](const BracketTerm& a, const BracketTerm& b) {
      return std::tie(a.i, a.j, a.k) < std::tie(b.i, b.j, b.k);
    });
    for (size_t s = 1; s < terms_.size(); ++s)
      if (terms_[s].i == terms_[s - 1].i && terms_[s].j == terms_[s - 1].j &&
          terms_[s].k == terms_[s - 1].k)
        throw ValidationError("duplicate bracket term for the same (i, j, k)");
    std::erase_if(terms_, [](const BracketTerm& t) { return t.value.is_zero(); });

    for (const auto& t : terms_) {
      c_.at(t.i, t.j, t.k) = t.value;
      c_.at(t.j, t.i, t.k) = -t.value;
    }
    check_jacobi();
  }

  int dim() const { return metric_.order(); }
  const SquareMatrix& metric() const { return metric_; }
  const SquareMatrix& metric_inverse() const { return metric_inverse_; }
  const std::vector<BracketTerm>& bracket_terms() const { return terms_; }

  // c_{ij}^k with both index orders available.
  const Rational& bracket_constant(int i, int j, int k) const { return c_.at(i, j, k); }
  const MultiTensor& structure_constants() const { return c_; }

  // [x, y]^k = x^i y^j c_{ij}^k for constant-coefficient fields.
  FrameVector lie_bracket(const FrameVector& x, const FrameVector& y) const {
    const int n = dim();
    if (static_cast<int>(x.size()) != n || static_cast<int>(y.size()) != n)
      throw DimensionMismatch("lie_bracket: vector length does not match dimension");
    FrameVector out(static_cast<size_t>(n));
    for (const auto& t : terms_) {
      const Rational cross = x[static_cast<size_t>(t.i)] * y[static_cast<size_t>(t.j)] -
                             x[static_cast<size_t>(t.j)] * y[static_cast<size_t>(t.i)];
      if (cross.is_zero()) continue;
      out[static_cast<size_t>(t.k)] += cross * t.value;
    }
    return out;
  }

  Rational inner(const FrameVector& x, const FrameVector& y) const {
    return pairing(metric_, x, y);
  }

 private:
  void check_jacobi() const {
    const int n = dim();
    // The cyclic sum is totally antisymmetric in (i, j, k) and vanishes
    // identically when two of them coincide, so distinct i < j < k suffices.
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        for (int k = j + 1; k < n; ++k)
          for (int l = 0; l < n; ++l) {
            Rational sum;
            for (int m = 0; m < n; ++m) {
              sum += c_.at(i, j, m) * c_.at(m, k, l);
              sum += c_.at(j, k, m) * c_.at(m, i, l);
              sum += c_.at(k, i, m) * c_.at(m, j, l);
            }
            if (!sum.is_zero())
              throw ValidationError(
                  "Jacobi identity fails at (i, j, k, component) = (" + std::to_string(i + 1) +
                  ", " + std::to_string(j + 1) + ", " + std::to_string(k + 1) + ", " +
                  std::to_string(l + 1) + ")");
          }
  }

  SquareMatrix metric_;
  SquareMatrix metric_inverse_;
  std::vector<BracketTerm> terms_;
  MultiTensor c_;
};

}  // namespace lpkrys
