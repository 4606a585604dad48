// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "lpkrys/errors.hpp"
#include "lpkrys/linalg.hpp"
#include "lpkrys/rational.hpp"

namespace lpkrys {

enum class Variance { Upper, Lower };

// Dense tensor of rank 0..4 over a fixed n-dimensional frame, row-major in
// the index tuple. The variance list is bookkeeping for readers and for the
// frame/coordinate conversions upstream; the container itself is agnostic.
class MultiTensor {
 public:
  MultiTensor(int dim, std::vector<Variance> variance)
      : dim_(dim), variance_(std::move(variance)) {
    if (dim < 1) throw DimensionMismatch("tensor dimension must be >= 1");
    if (variance_.size() > 4) throw DimensionMismatch("tensor rank must be <= 4");
    size_t total = 1;
    for (size_t s = 0; s < variance_.size(); ++s) total *= static_cast<size_t>(dim_);
    e_.resize(total);
  }

  int dim() const { return dim_; }
  int rank() const { return static_cast<int>(variance_.size()); }
  const std::vector<Variance>& variance() const { return variance_; }

  template <typename... Is>
  Rational& at(Is... idx) {
    return e_[flat({static_cast<int>(idx)...})];
  }
  template <typename... Is>
  const Rational& at(Is... idx) const {
    return e_[flat({static_cast<int>(idx)...})];
  }

  Rational& at_index(const std::vector<int>& idx) { return e_[flat_vec(idx)]; }
  const Rational& at_index(const std::vector<int>& idx) const { return e_[flat_vec(idx)]; }

  bool is_zero() const {
    for (const auto& x : e_)
      if (!x.is_zero()) return false;
    return true;
  }

  friend bool operator==(const MultiTensor& a, const MultiTensor& b) {
    return a.dim_ == b.dim_ && a.variance_ == b.variance_ && a.e_ == b.e_;
  }

  MultiTensor& operator+=(const MultiTensor& o) {
    require_same_shape(o, "tensor add");
    for (size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
    declared_.clear();  // arithmetic does not preserve declared symmetries
    return *this;
  }
  MultiTensor& operator-=(const MultiTensor& o) {
    require_same_shape(o, "tensor subtract");
    for (size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
    declared_.clear();
    return *this;
  }
  friend MultiTensor operator+(MultiTensor a, const MultiTensor& b) { return a += b; }
  friend MultiTensor operator-(MultiTensor a, const MultiTensor& b) { return a -= b; }

  friend MultiTensor operator*(const Rational& c, MultiTensor t) {
    for (auto& x : t.e_) x *= c;
    return t;
  }

  // Visits every index tuple in lexicographic order.
  void for_each_index(const std::function<void(const std::vector<int>&)>& fn) const {
    std::vector<int> idx(static_cast<size_t>(rank()), 0);
    const size_t total = e_.size();
    for (size_t f = 0; f < total; ++f) {
      fn(idx);
      for (int pos = rank() - 1; pos >= 0; --pos) {
        if (++idx[static_cast<size_t>(pos)] < dim_) break;
        idx[static_cast<size_t>(pos)] = 0;
      }
    }
  }

  bool symmetric_in(int a, int b) const { return pair_symmetry(a, b, +1); }
  bool antisymmetric_in(int a, int b) const { return pair_symmetry(a, b, -1); }

  // Records a symmetry the producer promises; verified entry-wise on the
  // spot, so a stored flag is always true of the data.
  void declare_symmetric(int a, int b) {
    if (!symmetric_in(a, b))
      throw InternalInconsistency("declared symmetry fails entry-wise");
    declared_.push_back({a, b, +1});
  }
  void declare_antisymmetric(int a, int b) {
    if (!antisymmetric_in(a, b))
      throw InternalInconsistency("declared antisymmetry fails entry-wise");
    declared_.push_back({a, b, -1});
  }

  struct DeclaredSymmetry {
    int slot_a;
    int slot_b;
    int sign;  // +1 symmetric, -1 antisymmetric
  };
  const std::vector<DeclaredSymmetry>& declared_symmetries() const { return declared_; }

  // Index tuple of the entry with the largest absolute value, lexicographic
  // first among ties; nullopt when the tensor vanishes. This is how check
  // residuals pick the witness they report.
  std::optional<std::vector<int>> worst_entry() const {
    std::optional<std::vector<int>> best;
    Rational best_abs;
    for_each_index([&](const std::vector<int>& idx) {
      const Rational& v = at_index(idx);
      if (v.is_zero()) return;
      const Rational a = v.abs();
      if (!best || a > best_abs) {
        best = idx;
        best_abs = a;
      }
    });
    return best;
  }

 private:
  bool pair_symmetry(int a, int b, int sign) const {
    if (a == b || a < 0 || b < 0 || a >= rank() || b >= rank())
      throw DimensionMismatch("symmetry check: bad slot pair");
    bool ok = true;
    for_each_index([&](const std::vector<int>& idx) {
      if (!ok) return;
      std::vector<int> swapped = idx;
      std::swap(swapped[static_cast<size_t>(a)], swapped[static_cast<size_t>(b)]);
      const Rational& lhs = at_index(idx);
      const Rational rhs =
          sign > 0 ? at_index(swapped) : -at_index(swapped);
      if (lhs != rhs) ok = false;
    });
    return ok;
  }

  size_t flat(std::initializer_list<int> idx) const {
    if (static_cast<int>(idx.size()) != rank())
      throw DimensionMismatch("tensor access with wrong number of indices");
    size_t f = 0;
    for (int i : idx) {
      if (i < 0 || i >= dim_) throw DimensionMismatch("tensor index out of range");
      f = f * static_cast<size_t>(dim_) + static_cast<size_t>(i);
    }
    return f;
  }
  size_t flat_vec(const std::vector<int>& idx) const {
    if (static_cast<int>(idx.size()) != rank())
      throw DimensionMismatch("tensor access with wrong number of indices");
    size_t f = 0;
    for (int i : idx) {
      if (i < 0 || i >= dim_) throw DimensionMismatch("tensor index out of range");
      f = f * static_cast<size_t>(dim_) + static_cast<size_t>(i);
    }
    return f;
  }
  void require_same_shape(const MultiTensor& o, const char* where) const {
    if (dim_ != o.dim_ || variance_ != o.variance_)
      throw DimensionMismatch(std::string(where) + ": shapes differ");
  }

  int dim_;
  std::vector<Variance> variance_;
  std::vector<Rational> e_;
  std::vector<DeclaredSymmetry> declared_;
};

// Rank-0 convenience: a scalar residual as a tensor.
inline MultiTensor scalar_tensor(int dim, const Rational& value) {
  MultiTensor t(dim, {});
  t.at() = value;
  return t;
}

inline MultiTensor matrix_tensor(const SquareMatrix& m, Variance a, Variance b) {
  MultiTensor t(m.order(), {a, b});
  for (int i = 0; i < m.order(); ++i)
    for (int j = 0; j < m.order(); ++j) t.at(i, j) = m.at(i, j);
  return t;
}

inline MultiTensor vector_tensor(const FrameVector& v, Variance a) {
  MultiTensor t(static_cast<int>(v.size()), {a});
  for (size_t i = 0; i < v.size(); ++i) t.at(static_cast<int>(i)) = v[i];
  return t;
}

}  // namespace lpkrys
