// Copyright 2026 The thetacong Authors.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

// The curves E_{n,theta}: y^2 = x (x + (r+s) n) (x - (r-s) n) over Q or a
// real quadratic field, with the chord-tangent group law.

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "thetacong/quad.hpp"

namespace thetacong {

/// An angle 0 < theta < pi with cos(theta) = s/r, gcd(r, s) = 1, 0 < |s| < r.
class Angle {
 public:
  /// Throws DomainError when the invariants fail.
  Angle(std::int64_t r, std::int64_t s);

  /// cos(theta) = q; q is reduced first.
  static Angle from_cos(const Rat& q);
  /// Parses "s/r" (e.g. "1/2", "-1/2").
  static Angle parse(const std::string& cos_text);

  std::int64_t r() const { return r_; }
  std::int64_t s() const { return s_; }
  Rat cos() const { return make_rat(Int(static_cast<long>(s_)), Int(static_cast<long>(r_))); }

  /// alpha_theta^2 = r^2 - s^2.
  Int alpha_sq() const;
  /// sqf(r^2 - s^2), sqf(2r(r-s)), sqf(2r(r+s)).
  Int sqf_alpha_sq() const;
  Int sqf_2r_r_minus_s() const;
  Int sqf_2r_r_plus_s() const;

  std::string to_string() const;  // "s/r"

  friend bool operator==(const Angle&, const Angle&) = default;

 private:
  std::int64_t r_;
  std::int64_t s_;
};

class CurvePoint {
 public:
  static CurvePoint infinity() { return CurvePoint(); }
  CurvePoint(QuadElem x, QuadElem y) : inf_(false), x_(std::move(x)), y_(std::move(y)) {}

  bool is_infinity() const { return inf_; }
  /// Only meaningful for affine points.
  const QuadElem& x() const { return x_; }
  const QuadElem& y() const { return y_; }

  CurvePoint conj() const { return inf_ ? *this : CurvePoint(x_.conj(), y_.conj()); }

  friend bool operator==(const CurvePoint& p, const CurvePoint& q) {
    if (p.inf_ || q.inf_) return p.inf_ == q.inf_;
    return p.x_ == q.x_ && p.y_ == q.y_;
  }

  std::string to_string() const;

 private:
  CurvePoint() = default;
  bool inf_ = true;
  QuadElem x_;
  QuadElem y_;
};

/// E_{n,theta} over a base field; n >= 1 squarefree.
class Curve {
 public:
  Curve(std::int64_t n, Angle angle, Field field);

  std::int64_t n() const { return n_; }
  const Angle& angle() const { return angle_; }
  const Field& field() const { return field_; }

  /// The three x-roots 0, -(r+s)n, (r-s)n.
  std::array<Rat, 3> roots() const;
  bool is_root(const Rat& e) const;

  /// Weierstrass coefficients of y^2 = x^3 + a2 x^2 + a4 x.
  Int a2() const;
  Int a4() const;

  /// x^3 + a2 x^2 + a4 x.
  QuadElem cubic(const QuadElem& x) const;

  /// The same curve over another field.
  Curve over(const Field& field) const { return Curve(n_, angle_, field); }

  std::string to_string() const;

  friend bool operator==(const Curve&, const Curve&) = default;

 private:
  std::int64_t n_;
  Angle angle_;
  Field field_;
};

Curve make_curve(std::int64_t n, const Angle& angle, const Field& field);

bool is_on_curve(const Curve& curve, const CurvePoint& p);

/// Group law. Throws DomainError for points off the curve or outside its field.
CurvePoint add(const Curve& curve, const CurvePoint& p, const CurvePoint& q);
CurvePoint neg(const CurvePoint& p);
CurvePoint sub(const Curve& curve, const CurvePoint& p, const CurvePoint& q);
CurvePoint dbl(const Curve& curve, const CurvePoint& p);
CurvePoint scalar_mul(const Curve& curve, std::int64_t k, const CurvePoint& p);

/// {inf, (0,0), (-(r+s)n, 0), ((r-s)n, 0)}.
std::array<CurvePoint, 4> two_torsion(const Curve& curve);

/// P in 2E(F): x, x + (r+s)n and x - (r-s)n are all squares in F.
bool is_in_2E(const Curve& curve, const CurvePoint& p);

/// All Q in E(F) with 2Q = (e, 0) for a root e.
std::vector<CurvePoint> halve_two_torsion(const Curve& curve, const Rat& root);

/// All Q in E(F) with 2Q = P, for any affine P.
std::vector<CurvePoint> halve(const Curve& curve, const CurvePoint& p);

/// Least k <= bound with kP = inf, or nullopt when none (treated as
/// infinite order).
std::optional<int> point_order(const Curve& curve, const CurvePoint& p, int bound = 18);

/// E_{mn,theta} over Q for a curve E_{n,theta} over Q(sqrt m).
Curve twist(const Curve& curve);

/// Maps P on E_{n}/K with conj(P) = -P to (m x, m^2 y') on E_{mn}/Q, where
/// y = y' sqrt(m).
CurvePoint twist_descend(const Curve& curve, const CurvePoint& p);

/// Inverse of twist_descend: (X, Y) on E_{mn}/Q to (X/m, Y sqrt(m)/m^2).
CurvePoint twist_ascend(const Curve& curve, const CurvePoint& p);

}  // namespace thetacong
