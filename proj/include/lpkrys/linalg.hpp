// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lpkrys/errors.hpp"
#include "lpkrys/rational.hpp"

namespace lpkrys {

// Coefficient vector with respect to a fixed frame e_1 .. e_n.
using FrameVector = std::vector<Rational>;

inline FrameVector zero_vector(int n) { return FrameVector(static_cast<size_t>(n)); }

inline FrameVector basis_vector(int n, int i) {
  FrameVector v(static_cast<size_t>(n));
  v[static_cast<size_t>(i)] = Rational(1);
  return v;
}

inline bool is_zero(const FrameVector& v) {
  for (const auto& c : v)
    if (!c.is_zero()) return false;
  return true;
}

inline void require_same_length(const FrameVector& a, const FrameVector& b, const char* where) {
  if (a.size() != b.size())
    throw DimensionMismatch(std::string(where) + ": vector lengths " +
                            std::to_string(a.size()) + " and " + std::to_string(b.size()));
}

inline FrameVector add(FrameVector a, const FrameVector& b) {
  require_same_length(a, b, "add");
  for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

inline FrameVector subtract(FrameVector a, const FrameVector& b) {
  require_same_length(a, b, "subtract");
  for (size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

inline FrameVector scale(const Rational& c, FrameVector v) {
  for (auto& x : v) x *= c;
  return v;
}

inline FrameVector negate(FrameVector v) {
  for (auto& x : v) x = -x;
  return v;
}

// Signature of a symmetric bilinear form: counts of positive, negative and
// zero entries after congruence diagonalization (Sylvester's law makes the
// triple basis-independent).
struct Inertia {
  int positives = 0;
  int negatives = 0;
  int zeros = 0;
  friend bool operator==(const Inertia&, const Inertia&) = default;
};

// Dense square matrix over Rational, row-major. Indices are 0-based at this
// level; the file format and reports use 1-based labels.
class SquareMatrix {
 public:
  explicit SquareMatrix(int order)
      : order_(order), e_(static_cast<size_t>(order) * static_cast<size_t>(order)) {
    if (order < 1) throw DimensionMismatch("matrix order must be >= 1");
  }

  static SquareMatrix identity(int order) {
    SquareMatrix m(order);
    for (int i = 0; i < order; ++i) m.at(i, i) = Rational(1);
    return m;
  }

  static SquareMatrix diagonal(const std::vector<Rational>& d) {
    SquareMatrix m(static_cast<int>(d.size()));
    for (int i = 0; i < m.order(); ++i) m.at(i, i) = d[static_cast<size_t>(i)];
    return m;
  }

  int order() const { return order_; }

  Rational& at(int i, int j) { return e_[flat(i, j)]; }
  const Rational& at(int i, int j) const { return e_[flat(i, j)]; }

  bool is_zero() const {
    for (const auto& x : e_)
      if (!x.is_zero()) return false;
    return true;
  }

  bool is_symmetric() const {
    for (int i = 0; i < order_; ++i)
      for (int j = i + 1; j < order_; ++j)
        if (at(i, j) != at(j, i)) return false;
    return true;
  }

  SquareMatrix transpose() const {
    SquareMatrix t(order_);
    for (int i = 0; i < order_; ++i)
      for (int j = 0; j < order_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  friend bool operator==(const SquareMatrix& a, const SquareMatrix& b) {
    return a.order_ == b.order_ && a.e_ == b.e_;
  }

  SquareMatrix& operator+=(const SquareMatrix& o) {
    require_same_order(o, "matrix add");
    for (size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
    return *this;
  }
  SquareMatrix& operator-=(const SquareMatrix& o) {
    require_same_order(o, "matrix subtract");
    for (size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
    return *this;
  }
  friend SquareMatrix operator+(SquareMatrix a, const SquareMatrix& b) { return a += b; }
  friend SquareMatrix operator-(SquareMatrix a, const SquareMatrix& b) { return a -= b; }

  friend SquareMatrix operator*(const Rational& c, SquareMatrix m) {
    for (auto& x : m.e_) x *= c;
    return m;
  }

  friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
    a.require_same_order(b, "matrix multiply");
    const int n = a.order_;
    SquareMatrix p(n);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        const Rational& aik = a.at(i, k);
        if (aik.is_zero()) continue;
        for (int j = 0; j < n; ++j) {
          const Rational& bkj = b.at(k, j);
          if (bkj.is_zero()) continue;
          p.at(i, j) += aik * bkj;
        }
      }
    return p;
  }

  // Matrix acting on a coefficient vector: (M v)^i = M_{ij} v^j.
  FrameVector apply(const FrameVector& v) const {
    if (static_cast<int>(v.size()) != order_)
      throw DimensionMismatch("apply: matrix order " + std::to_string(order_) +
                              ", vector length " + std::to_string(v.size()));
    FrameVector out(static_cast<size_t>(order_));
    for (int i = 0; i < order_; ++i)
      for (int j = 0; j < order_; ++j) {
        if (at(i, j).is_zero() || v[static_cast<size_t>(j)].is_zero()) continue;
        out[static_cast<size_t>(i)] += at(i, j) * v[static_cast<size_t>(j)];
      }
    return out;
  }

  Rational determinant() const {
    SquareMatrix w(*this);
    Rational det(1);
    for (int col = 0; col < order_; ++col) {
      int pivot = -1;
      for (int row = col; row < order_; ++row)
        if (!w.at(row, col).is_zero()) { pivot = row; break; }
      if (pivot < 0) return Rational(0);
      if (pivot != col) { w.swap_rows(pivot, col); det = -det; }
      det *= w.at(col, col);
      const Rational inv = w.at(col, col).reciprocal();
      for (int row = col + 1; row < order_; ++row) {
        if (w.at(row, col).is_zero()) continue;
        const Rational f = w.at(row, col) * inv;
        for (int j = col; j < order_; ++j) w.at(row, j) -= f * w.at(col, j);
      }
    }
    return det;
  }

  // Exact Gauss-Jordan inverse.
  SquareMatrix invert() const {
    SquareMatrix w(*this);
    SquareMatrix inv = identity(order_);
    for (int col = 0; col < order_; ++col) {
      int pivot = -1;
      for (int row = col; row < order_; ++row)
        if (!w.at(row, col).is_zero()) { pivot = row; break; }
      if (pivot < 0) throw SingularMatrix("invert: matrix is singular");
      if (pivot != col) { w.swap_rows(pivot, col); inv.swap_rows(pivot, col); }
      const Rational scale = w.at(col, col).reciprocal();
      for (int j = 0; j < order_; ++j) {
        w.at(col, j) *= scale;
        inv.at(col, j) *= scale;
      }
      for (int row = 0; row < order_; ++row) {
        if (row == col || w.at(row, col).is_zero()) continue;
        const Rational f = w.at(row, col);
        for (int j = 0; j < order_; ++j) {
          w.at(row, j) -= f * w.at(col, j);
          inv.at(row, j) -= f * inv.at(col, j);
        }
      }
    }
    return inv;
  }

  // Sylvester inertia by symmetric congruence elimination. Each step applies
  // the same operation to rows and columns, so the diagonal reached at the
  // end is congruent to the input and its sign counts are the signature.
  Inertia signature() const {
    if (!is_symmetric()) throw NotSymmetric("signature: matrix is not symmetric");
    SquareMatrix w(*this);
    const int n = order_;
    for (int k = 0; k < n; ++k) {
      if (w.at(k, k).is_zero()) {
        // Prefer bringing a nonzero diagonal entry into position k.
        int swap = -1;
        for (int r = k + 1; r < n; ++r)
          if (!w.at(r, r).is_zero()) { swap = r; break; }
        if (swap >= 0) {
          w.swap_rows(k, swap);
          w.swap_cols(k, swap);
        } else {
          // All remaining diagonal entries vanish. If some off-diagonal
          // w[k][j] is nonzero, the congruence E = I + E_{kj} (add row j to
          // row k, column j to column k) creates 2 w[k][j] on the diagonal;
          // otherwise row k is entirely zero in the remaining block.
          int j = -1;
          for (int c = k + 1; c < n; ++c)
            if (!w.at(k, c).is_zero()) { j = c; break; }
          if (j < 0) continue;  // zero row: contributes a zero to the inertia
          for (int c = 0; c < n; ++c) w.at(k, c) += w.at(j, c);
          for (int r = 0; r < n; ++r) w.at(r, k) += w.at(r, j);
        }
      }
      const Rational inv = w.at(k, k).reciprocal();
      for (int r = k + 1; r < n; ++r) {
        if (w.at(r, k).is_zero()) continue;
        const Rational f = w.at(r, k) * inv;
        for (int c = 0; c < n; ++c) w.at(r, c) -= f * w.at(k, c);
        for (int c = 0; c < n; ++c) w.at(c, r) -= f * w.at(c, k);
      }
    }
    Inertia sig;
    for (int k = 0; k < n; ++k) {
      const int s = w.at(k, k).sign();
      if (s > 0) ++sig.positives;
      else if (s < 0) ++sig.negatives;
      else ++sig.zeros;
    }
    return sig;
  }

 private:
  size_t flat(int i, int j) const {
    return static_cast<size_t>(i) * static_cast<size_t>(order_) + static_cast<size_t>(j);
  }
  void require_same_order(const SquareMatrix& o, const char* where) const {
    if (order_ != o.order_)
      throw DimensionMismatch(std::string(where) + ": orders " + std::to_string(order_) +
                              " and " + std::to_string(o.order_));
  }
  void swap_rows(int a, int b) {
    for (int j = 0; j < order_; ++j) std::swap(at(a, j), at(b, j));
  }
  void swap_cols(int a, int b) {
    for (int i = 0; i < order_; ++i) std::swap(at(i, a), at(i, b));
  }

  int order_;
  std::vector<Rational> e_;
};

// g(x, y) for a bilinear form given by its matrix.
inline Rational pairing(const SquareMatrix& g, const FrameVector& x, const FrameVector& y) {
  require_same_length(x, y, "pairing");
  if (static_cast<int>(x.size()) != g.order())
    throw DimensionMismatch("pairing: form order does not match vector length");
  Rational out;
  for (int i = 0; i < g.order(); ++i) {
    if (x[static_cast<size_t>(i)].is_zero()) continue;
    for (int j = 0; j < g.order(); ++j) {
      if (g.at(i, j).is_zero() || y[static_cast<size_t>(j)].is_zero()) continue;
      out += x[static_cast<size_t>(i)] * g.at(i, j) * y[static_cast<size_t>(j)];
    }
  }
  return out;
}

}  // namespace lpkrys
