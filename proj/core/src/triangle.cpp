// Copyright 2026 The thetacong Authors.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#include "thetacong/triangle.hpp"

#include "thetacong/errors.hpp"

namespace thetacong {

namespace {

Int big(std::int64_t v) { return Int(static_cast<long>(v)); }

QuadElem rat(const Int& v) { return QuadElem(Rat(v)); }

bool in_field(const QuadElem& v, const Field& field) {
  return v.field().is_rational() || v.field() == field;
}

}  // namespace

Triangle Triangle::validate(QuadElem u, QuadElem v, QuadElem w, std::int64_t n,
                            const Angle& angle, const Field& field) {
  if (n < 1) throw DomainError("area coefficient n must be positive");
  for (const QuadElem* side : {&u, &v, &w})
    if (!in_field(*side, field))
      throw DomainError("side " + side->to_string() + " is not in " + field.to_string());
  u = u.in(field);
  v = v.in(field);
  w = w.in(field);
  if (quad_sign(u) <= 0 || quad_sign(v) <= 0 || quad_sign(w) <= 0)
    throw InvalidTriangle("positivity", "sides must be positive: " + u.to_string() + ", " +
                                            v.to_string() + ", " + w.to_string());
  if (compare(u, v) > 0) std::swap(u, v);

  const Int r = big(angle.r()), s = big(angle.s());
  const QuadElem uv = u * v;
  const QuadElem two_rn = rat(2 * r * big(n));
  if (uv != two_rn)
    throw InvalidTriangle("UV = 2rn", "UV = " + uv.to_string() + ", 2rn = " + two_rn.to_string());
  const QuadElem rhs = u * u + v * v - QuadElem(make_rat(2 * s, r)) * uv;
  if (w * w != rhs)
    throw InvalidTriangle("W^2 = U^2 + V^2 - (2s/r)UV",
                          "W^2 = " + (w * w).to_string() + ", rhs = " + rhs.to_string());
  return Triangle(u, v, w, n, angle, field);
}

Triangle Triangle::scaled(const QuadElem& factor, std::int64_t new_n, const Field& field) const {
  return validate(u_ * factor, v_ * factor, w_ * factor, new_n, angle_, field);
}

std::string Triangle::to_string() const {
  return "(" + u_.to_string() + ", " + v_.to_string() + ", " + w_.to_string() + ")";
}

std::string to_string(TriangleType type) {
  switch (type) {
    case TriangleType::Rational: return "rational";
    case TriangleType::Type1: return "Type 1";
    case TriangleType::Type2: return "Type 2";
    case TriangleType::Type3: return "Type 3";
    case TriangleType::Type4: return "Type 4";
  }
  return "?";
}

std::string type_tag(TriangleType type) {
  switch (type) {
    case TriangleType::Rational: return "rational";
    case TriangleType::Type1: return "1";
    case TriangleType::Type2: return "2";
    case TriangleType::Type3: return "3";
    case TriangleType::Type4: return "4";
  }
  return "?";
}

CurvePoint phi(const Triangle& t) {
  const QuadElem& u = t.U();
  const QuadElem& v = t.V();
  const QuadElem& w = t.W();
  QuadElem x = w * w / QuadElem(4);
  QuadElem y = w * (v * v - u * u) / QuadElem(8);
  return CurvePoint(x.in(t.field()), y.in(t.field()));
}

Triangle psi(const Curve& curve, const CurvePoint& p) {
  if (!is_on_curve(curve, p)) throw DomainError(p.to_string() + " is not on " + curve.to_string());
  if (p.is_infinity()) throw NotInImage("psi is undefined at infinity");
  if (quad_sign(p.y()) < 0) throw DomainError("psi needs y >= 0, got " + p.to_string());

  const Int r = big(curve.angle().r()), s = big(curve.angle().s()), n = big(curve.n());
  const Field& field = curve.field();
  auto root = [&](const QuadElem& v, const char* what) {
    auto sq = sqrt_in(v, field);
    if (!sq)
      throw NotInImage(std::string(what) + " = " + v.to_string() + " is not a square in " +
                       field.to_string());
    return *sq;
  };
  const QuadElem su = root(p.x(), "u");
  const QuadElem s1 = root(p.x() + rat((r + s) * n), "u + (r+s)n");
  const QuadElem s2 = root(p.x() - rat((r - s) * n), "u - (r-s)n");
  return Triangle::validate(s1 - s2, s1 + s2, QuadElem(2) * su, curve.n(), curve.angle(), field);
}

TriangleType classify(const Triangle& t) {
  const QuadElem &u = t.U(), &v = t.V(), &w = t.W();
  if (u.is_rational() && v.is_rational() && w.is_rational()) return TriangleType::Rational;
  if (u.is_pure_surd() && v.is_pure_surd() && w.is_pure_surd()) return TriangleType::Type1;
  if (u.is_rational() && v.is_rational() && w.is_pure_surd()) return TriangleType::Type2;
  if (!u.is_rational() && !v.is_rational() && w.is_rational()) {
    if (u.conj() == v) return TriangleType::Type3;
    if (u.conj() == -v) return TriangleType::Type4;
  }
  throw OutsideClassification("triangle " + t.to_string() + " matches none of the four types");
}

ConicPoint to_conic_point(const Triangle& t) {
  const TriangleType type = classify(t);
  const Int r = big(t.angle().r()), s = big(t.angle().s()), m = big(t.field().m());
  ConicPoint out;
  switch (type) {
    case TriangleType::Type2: {
      const Rat u = t.U().a(), v = t.V().a(), w = t.W().b();
      out = {Rat(r * u - s * v), v, Rat(m * r * w), Conic{m, m * (r * r - s * s)}};
      break;
    }
    case TriangleType::Type3:
      out = {t.V().a(), t.V().b(), Rat(r * t.W().a()),
             Conic{2 * r * (r - s), 2 * m * r * (r + s)}};
      break;
    case TriangleType::Type4:
      out = {t.V().a(), t.V().b(), Rat(r * t.W().a()),
             Conic{2 * r * (r + s), 2 * m * r * (r - s)}};
      break;
    default:
      throw DomainError("to_conic_point needs a Type 2, 3 or 4 triangle, got " + to_string(type));
  }
  if (out.z * out.z != out.conic.A * out.x * out.x + out.conic.B * out.y * out.y)
    throw std::logic_error("conic point does not satisfy its conic");
  return out;
}

}  // namespace thetacong
