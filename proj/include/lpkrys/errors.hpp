// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace lpkrys {

// Root of the library's error hierarchy. Everything thrown on purpose derives
// from this; anything else escaping the library is a bug.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Matrix inversion hit a zero determinant. For metric input this signals a
// degenerate metric in the spec file.
class SingularMatrix : public Error {
 public:
  explicit SingularMatrix(const std::string& what) : Error(what) {}
};

// A symmetric-only operation (inertia, congruence diagonalization) received a
// non-symmetric matrix.
class NotSymmetric : public Error {
 public:
  explicit NotSymmetric(const std::string& what) : Error(what) {}
};

class DimensionMismatch : public Error {
 public:
  explicit DimensionMismatch(const std::string& what) : Error(what) {}
};

// Two supposedly equivalent evaluation routes disagreed, or a declared tensor
// symmetry failed entry-wise. Always a defect, never user input.
class InternalInconsistency : public Error {
 public:
  explicit InternalInconsistency(const std::string& what) : Error(what) {}
};

// sigma = 0 makes the soliton Ricci form and its derived scalars undefined.
class SigmaZero : public Error {
 public:
  explicit SigmaZero(const std::string& what) : Error(what) {}
};

// Requested dimension outside the operation's admissible range.
class BadDimension : public Error {
 public:
  explicit BadDimension(const std::string& what) : Error(what) {}
};

// Input text is not syntactically valid (unparseable document, bad rational).
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error(what) {}
};

// Document parsed but has missing/unknown/ill-typed fields.
class SchemaError : public Error {
 public:
  explicit SchemaError(const std::string& what) : Error(what) {}
};

// Document is well-formed but violates a structural invariant (non-Lorentzian
// metric, Jacobi failure, inconsistent redundant fields).
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what) : Error(what) {}
};

}  // namespace lpkrys
