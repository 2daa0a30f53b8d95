// Copyright 2026 The thetacong Authors.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

// (K, theta, n)-triangles and their correspondence with 2E_{n,theta}(K).
//
// A triangle (U, V, W) has the angle theta between U and V, so
//
//     U V = 2 r n,    W^2 = U^2 + V^2 - (2s/r) U V,
//
// and its area is n * sqrt(r^2 - s^2). phi sends it to (W^2/4, W(V^2-U^2)/8)
// in 2E(K); psi inverts phi using principal square roots.

#pragma once

#include <array>
#include <string>

#include "thetacong/curve.hpp"

namespace thetacong {

class Triangle {
 public:
  /// Checks both identities and positivity; swaps U, V so that U <= V.
  /// Throws InvalidTriangle naming the failed identity.
  static Triangle validate(QuadElem u, QuadElem v, QuadElem w, std::int64_t n,
                           const Angle& angle, const Field& field);

  const QuadElem& U() const { return u_; }
  const QuadElem& V() const { return v_; }
  const QuadElem& W() const { return w_; }
  std::int64_t n() const { return n_; }
  const Angle& angle() const { return angle_; }
  const Field& field() const { return field_; }

  /// Sides multiplied by a common factor; the area coefficient becomes
  /// n * factor^2, which must be an integer.
  Triangle scaled(const QuadElem& factor, std::int64_t new_n, const Field& field) const;

  std::string to_string() const;

  friend bool operator==(const Triangle& a, const Triangle& b) {
    return a.u_ == b.u_ && a.v_ == b.v_ && a.w_ == b.w_ && a.n_ == b.n_ && a.angle_ == b.angle_;
  }

 private:
  Triangle(QuadElem u, QuadElem v, QuadElem w, std::int64_t n, Angle angle, Field field)
      : u_(std::move(u)), v_(std::move(v)), w_(std::move(w)), n_(n), angle_(angle), field_(field) {}

  QuadElem u_, v_, w_;
  std::int64_t n_;
  Angle angle_;
  Field field_;
};

enum class TriangleType { Rational, Type1, Type2, Type3, Type4 };

std::string to_string(TriangleType type);
/// "rational", "1", "2", "3", "4".
std::string type_tag(TriangleType type);

CurvePoint phi(const Triangle& t);

/// Throws NotInImage when a square root is missing, DomainError when P is
/// off the curve or has y < 0.
Triangle psi(const Curve& curve, const CurvePoint& p);

/// Throws OutsideClassification when no type matches.
TriangleType classify(const Triangle& t);

/// z^2 = A x^2 + B y^2.
struct Conic {
  Int A;
  Int B;
  friend bool operator==(const Conic&, const Conic&) = default;
};

struct ConicPoint {
  Rat x, y, z;
  Conic conic;
};

/// The rational point a Type 2, 3 or 4 triangle induces on its conic:
/// Type 2 (u, v, w sqrt m) -> (ru - sv, v, mrw) on z^2 = m x^2 + m(r^2-s^2) y^2;
/// Type 3 (u - v sqrt m, u + v sqrt m, w) -> (u, v, rw) on z^2 = 2r(r-s) x^2 + 2mr(r+s) y^2;
/// Type 4 (-u + v sqrt m, u + v sqrt m, w) -> (u, v, rw) on z^2 = 2r(r+s) x^2 + 2mr(r-s) y^2.
ConicPoint to_conic_point(const Triangle& t);

}  // namespace thetacong
