// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdlib>
#include <string>
#include <string_view>
#include <utility>

#include "lpkrys/errors.hpp"

namespace lpkrys {

// Arbitrary-precision rational, always in canonical form: lowest terms,
// denominator > 0, zero stored as 0/1. Wraps GMP's mpq_class; every
// constructor canonicalizes, so equality is plain value equality.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit integer promotion is intended
  Rational(long num, long den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  // Strict text form: optional sign, digits, optionally "/" sign digits.
  // No whitespace, no decimal points, no exponents. Denominator must be
  // nonzero; the value is canonicalized (so "2/-4" parses to -1/2).
  static Rational parse(std::string_view text) {
    if (!is_valid_text(text))
      throw ParseError("invalid rational literal: \"" + std::string(text) + "\"");
    // mpz_set_str does not take a leading '+'.
    auto as_mpz = [](std::string_view s) {
      if (!s.empty() && s.front() == '+') s.remove_prefix(1);
      return mpz_class(std::string(s));
    };
    const auto slash = text.find('/');
    mpz_class num = as_mpz(text.substr(0, slash));
    mpz_class den(1);
    if (slash != std::string_view::npos) {
      den = as_mpz(text.substr(slash + 1));
      if (den == 0)
        throw ParseError("rational literal with zero denominator: \"" + std::string(text) + "\"");
    }
    mpq_class q(num, den);
    q.canonicalize();
    return Rational(std::move(q));
  }

  static bool is_valid_text(std::string_view text) {
    auto digits = [](std::string_view s) {
      if (!s.empty() && (s.front() == '+' || s.front() == '-')) s.remove_prefix(1);
      if (s.empty()) return false;
      for (char c : s)
        if (c < '0' || c > '9') return false;
      return true;
    };
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return digits(text);
    return digits(text.substr(0, slash)) && digits(text.substr(slash + 1));
  }

  // Canonical text form: "p" when the denominator is 1, else "p/q".
  std::string str() const { return v_.get_str(); }

  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }
  Rational abs() const { return Rational(mpq_class(::abs(v_))); }
  Rational reciprocal() const {
    if (is_zero()) throw std::domain_error("reciprocal of zero");
    return Rational(mpq_class(1 / v_));
  }

  Rational operator-() const { return Rational(mpq_class(-v_)); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("rational division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

 private:
  mpq_class v_;
};

inline Rational rat(std::string_view text) { return Rational::parse(text); }

}  // namespace lpkrys
