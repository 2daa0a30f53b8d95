// Copyright 2026 The thetacong Authors.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

// Arithmetic in a real quadratic field K = Q(sqrt m), with Q itself as the
// degenerate case. Elements are a + b*sqrt(m) with exact rational a, b; the
// real embedding sends sqrt(m) to the positive root.

#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "thetacong/arith.hpp"

namespace thetacong {

/// Base field: Q (m == 1) or Q(sqrt m) with m > 1 squarefree.
class Field {
 public:
  static Field rationals() { return Field(1); }
  /// Throws DomainError unless m > 1 is squarefree.
  static Field quadratic(std::int64_t m);

  std::int64_t m() const { return m_; }
  bool is_rational() const { return m_ == 1; }
  std::string to_string() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  explicit Field(std::int64_t m) : m_(m) {}
  std::int64_t m_;
};

/// The field containing both arguments; throws DomainError for two
/// different quadratic fields.
Field join(const Field& a, const Field& b);

class QuadElem {
 public:
  QuadElem() : field_(Field::rationals()) {}
  QuadElem(const Rat& a) : a_(a), field_(Field::rationals()) {}  // NOLINT: implicit by design of Q inside K
  QuadElem(long a) : a_(a), field_(Field::rationals()) {}        // NOLINT
  QuadElem(const Rat& a, const Rat& b, const Field& field);

  /// sqrt(m) as an element of K.
  static QuadElem sqrt_m(const Field& field);

  const Rat& a() const { return a_; }
  const Rat& b() const { return b_; }
  const Field& field() const { return field_; }

  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_rational() const { return b_ == 0; }
  /// x = b*sqrt(m) with b rational, i.e. x*sqrt(m) is in Q.
  bool is_pure_surd() const { return a_ == 0; }

  /// Galois conjugate a - b*sqrt(m).
  QuadElem conj() const { return QuadElem(a_, -b_, field_); }
  /// a^2 - m b^2 = x * conj(x).
  Rat norm() const;

  /// Same value viewed in a larger field.
  QuadElem in(const Field& field) const;

  QuadElem operator-() const { return QuadElem(-a_, -b_, field_); }
  QuadElem& operator+=(const QuadElem& o);
  QuadElem& operator-=(const QuadElem& o);
  QuadElem& operator*=(const QuadElem& o);
  /// Throws DomainError on division by zero.
  QuadElem& operator/=(const QuadElem& o);

  friend QuadElem operator+(QuadElem x, const QuadElem& y) { return x += y; }
  friend QuadElem operator-(QuadElem x, const QuadElem& y) { return x -= y; }
  friend QuadElem operator*(QuadElem x, const QuadElem& y) { return x *= y; }
  friend QuadElem operator/(QuadElem x, const QuadElem& y) { return x /= y; }

  /// Componentwise; elements of Q compare equal to their images in K.
  friend bool operator==(const QuadElem& x, const QuadElem& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }

  std::string to_string() const;

 private:
  Rat a_ = 0;
  Rat b_ = 0;
  Field field_;
};

/// Exact sign of the real embedding: -1, 0 or 1.
int quad_sign(const QuadElem& x);

/// Sign of x - y under the real embedding.
int compare(const QuadElem& x, const QuadElem& y);

/// |x| under the real embedding.
QuadElem abs(const QuadElem& x);

/// The square root of x in its field that is non-negative under the real
/// embedding, when x is a square there.
std::optional<QuadElem> is_square_quad(const QuadElem& x);

/// Same, but inside an explicitly given field (x is promoted first).
std::optional<QuadElem> sqrt_in(const QuadElem& x, const Field& field);

}  // namespace thetacong
