// Copyright 2026 The thetacong Authors.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#include "thetacong/curve.hpp"

#include <algorithm>
#include <numeric>

#include "thetacong/errors.hpp"

namespace thetacong {

namespace {

Int big(std::int64_t v) { return Int(static_cast<long>(v)); }

}  // namespace

Angle::Angle(std::int64_t r, std::int64_t s) : r_(r), s_(s) {
  if (r <= 0) throw DomainError("angle needs r > 0");
  if (s == 0) throw DomainError("angle needs s != 0 (theta = pi/2 is excluded)");
  if (std::abs(s) >= r) throw DomainError("angle needs |s| < r");
  if (std::gcd(r, s) != 1) throw DomainError("angle needs gcd(r, s) = 1");
}

Angle Angle::from_cos(const Rat& q) {
  Rat c = q;
  c.canonicalize();
  if (!c.get_num().fits_slong_p() || !c.get_den().fits_slong_p())
    throw DomainError("cosine " + thetacong::to_string(c) + " is too large");
  return Angle(c.get_den().get_si(), c.get_num().get_si());
}

Angle Angle::parse(const std::string& cos_text) { return from_cos(parse_rat(cos_text)); }

Int Angle::alpha_sq() const { return big(r_) * big(r_) - big(s_) * big(s_); }
Int Angle::sqf_alpha_sq() const { return sqf(alpha_sq()); }
Int Angle::sqf_2r_r_minus_s() const { return sqf(2 * big(r_) * (big(r_) - big(s_))); }
Int Angle::sqf_2r_r_plus_s() const { return sqf(2 * big(r_) * (big(r_) + big(s_))); }

std::string Angle::to_string() const { return std::to_string(s_) + "/" + std::to_string(r_); }

std::string CurvePoint::to_string() const {
  if (inf_) return "infinity";
  return "(" + x_.to_string() + ", " + y_.to_string() + ")";
}

Curve::Curve(std::int64_t n, Angle angle, Field field)
    : n_(n), angle_(angle), field_(field) {
  if (n < 1 || !is_squarefree(big(n)))
    throw DomainError("n must be a positive squarefree integer, got " + std::to_string(n));
}

std::array<Rat, 3> Curve::roots() const {
  const Int n = big(n_), r = big(angle_.r()), s = big(angle_.s());
  return {Rat(0), Rat(-(r + s) * n), Rat((r - s) * n)};
}

bool Curve::is_root(const Rat& e) const {
  auto rs = roots();
  return std::find(rs.begin(), rs.end(), e) != rs.end();
}

Int Curve::a2() const { return 2 * big(angle_.s()) * big(n_); }
Int Curve::a4() const { return -angle_.alpha_sq() * big(n_) * big(n_); }

QuadElem Curve::cubic(const QuadElem& x) const {
  // Horner: ((x + a2) x + a4) x
  QuadElem acc = x + QuadElem(Rat(a2()));
  acc *= x;
  acc += QuadElem(Rat(a4()));
  acc *= x;
  return acc;
}

std::string Curve::to_string() const {
  return "E_{" + std::to_string(n_) + ", cos=" + angle_.to_string() + "} over " +
         field_.to_string();
}

Curve make_curve(std::int64_t n, const Angle& angle, const Field& field) {
  return Curve(n, angle, field);
}

namespace {

bool in_field(const QuadElem& v, const Field& field) {
  return v.field().is_rational() || v.field() == field;
}

void require_on_curve(const Curve& curve, const CurvePoint& p) {
  if (!is_on_curve(curve, p))
    throw DomainError("point " + p.to_string() + " is not on " + curve.to_string());
}

CurvePoint add_unchecked(const Curve& curve, const CurvePoint& p, const CurvePoint& q) {
  if (p.is_infinity()) return q;
  if (q.is_infinity()) return p;
  const Field& f = curve.field();
  QuadElem lambda;
  if (p.x() == q.x()) {
    if (p.y() == -q.y()) return CurvePoint::infinity();
    // Tangent: (3x^2 + 2 a2 x + a4) / 2y
    QuadElem num = QuadElem(3) * p.x() * p.x() + QuadElem(Rat(2 * curve.a2())) * p.x() +
                   QuadElem(Rat(curve.a4()));
    lambda = num / (QuadElem(2) * p.y());
  } else {
    lambda = (q.y() - p.y()) / (q.x() - p.x());
  }
  QuadElem x3 = lambda * lambda - QuadElem(Rat(curve.a2())) - p.x() - q.x();
  QuadElem y3 = lambda * (p.x() - x3) - p.y();
  return CurvePoint(x3.in(f), y3.in(f));
}

}  // namespace

bool is_on_curve(const Curve& curve, const CurvePoint& p) {
  if (p.is_infinity()) return true;
  if (!in_field(p.x(), curve.field()) || !in_field(p.y(), curve.field())) return false;
  return p.y() * p.y() == curve.cubic(p.x());
}

CurvePoint add(const Curve& curve, const CurvePoint& p, const CurvePoint& q) {
  require_on_curve(curve, p);
  require_on_curve(curve, q);
  return add_unchecked(curve, p, q);
}

CurvePoint neg(const CurvePoint& p) {
  if (p.is_infinity()) return p;
  return CurvePoint(p.x(), -p.y());
}

CurvePoint sub(const Curve& curve, const CurvePoint& p, const CurvePoint& q) {
  return add(curve, p, neg(q));
}

CurvePoint dbl(const Curve& curve, const CurvePoint& p) { return add(curve, p, p); }

CurvePoint scalar_mul(const Curve& curve, std::int64_t k, const CurvePoint& p) {
  require_on_curve(curve, p);
  CurvePoint base = k < 0 ? neg(p) : p;
  std::uint64_t e = k < 0 ? static_cast<std::uint64_t>(-(k + 1)) + 1 : static_cast<std::uint64_t>(k);
  CurvePoint acc = CurvePoint::infinity();
  while (e) {
    if (e & 1) acc = add_unchecked(curve, acc, base);
    e >>= 1;
    if (e) base = add_unchecked(curve, base, base);
  }
  return acc;
}

std::array<CurvePoint, 4> two_torsion(const Curve& curve) {
  auto r = curve.roots();
  return {CurvePoint::infinity(), CurvePoint(QuadElem(r[0]), QuadElem(0)),
          CurvePoint(QuadElem(r[1]), QuadElem(0)), CurvePoint(QuadElem(r[2]), QuadElem(0))};
}

bool is_in_2E(const Curve& curve, const CurvePoint& p) {
  if (p.is_infinity()) return true;
  require_on_curve(curve, p);
  for (const Rat& e : curve.roots())
    if (!sqrt_in(p.x() - QuadElem(e), curve.field())) return false;
  return true;
}

namespace {

void push_unique(std::vector<CurvePoint>& out, const CurvePoint& p) {
  if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
}

// Adds (x, +-sqrt(cubic(x))) when those points double to `target`.
void add_halves_at(const Curve& curve, const QuadElem& x, const CurvePoint& target,
                   std::vector<CurvePoint>& out) {
  auto y = sqrt_in(curve.cubic(x), curve.field());
  if (!y) return;
  for (const QuadElem& yy : {*y, -*y}) {
    CurvePoint q(x.in(curve.field()), yy.in(curve.field()));
    if (add_unchecked(curve, q, q) == target) push_unique(out, q);
  }
}

}  // namespace

std::vector<CurvePoint> halve_two_torsion(const Curve& curve, const Rat& root) {
  if (!curve.is_root(root))
    throw DomainError(thetacong::to_string(root) + " is not a root of " + curve.to_string());
  std::vector<Rat> others;
  for (const Rat& e : curve.roots())
    if (e != root) others.push_back(e);
  const CurvePoint target(QuadElem(root), QuadElem(0));
  std::vector<CurvePoint> out;
  auto t = sqrt_in(QuadElem(Rat((root - others[0]) * (root - others[1]))), curve.field());
  if (!t) return out;
  for (const QuadElem& x : {QuadElem(root) + *t, QuadElem(root) - *t})
    add_halves_at(curve, x, target, out);
  return out;
}

std::vector<CurvePoint> halve(const Curve& curve, const CurvePoint& p) {
  require_on_curve(curve, p);
  std::vector<CurvePoint> out;
  if (p.is_infinity()) {
    for (const CurvePoint& t : two_torsion(curve)) out.push_back(t);
    return out;
  }
  std::array<QuadElem, 3> sq;
  auto roots = curve.roots();
  for (int i = 0; i < 3; ++i) {
    auto s = sqrt_in(p.x() - QuadElem(roots[i]), curve.field());
    if (!s) return out;
    sq[i] = *s;
  }
  // x(Q) = x0 + s1 s2 + s1 s3 + s2 s3 over the sign choices of s_i.
  for (int signs = 0; signs < 4; ++signs) {
    QuadElem s1 = sq[0];
    QuadElem s2 = (signs & 1) ? -sq[1] : sq[1];
    QuadElem s3 = (signs & 2) ? -sq[2] : sq[2];
    QuadElem x = p.x() + s1 * s2 + s1 * s3 + s2 * s3;
    add_halves_at(curve, x, p, out);
  }
  return out;
}

std::optional<int> point_order(const Curve& curve, const CurvePoint& p, int bound) {
  require_on_curve(curve, p);
  CurvePoint q = p;
  for (int k = 1; k <= bound; ++k) {
    if (q.is_infinity()) return k;
    q = add_unchecked(curve, q, p);
  }
  return std::nullopt;
}

Curve twist(const Curve& curve) {
  if (curve.field().is_rational()) throw DomainError("twist needs a curve over Q(sqrt m)");
  return Curve(curve.n() * curve.field().m(), curve.angle(), Field::rationals());
}

CurvePoint twist_descend(const Curve& curve, const CurvePoint& p) {
  Curve target = twist(curve);
  require_on_curve(curve, p);
  if (p.is_infinity()) return p;
  if (!p.x().is_rational() || !p.y().is_pure_surd())
    throw DomainError("twist_descend needs conj(P) = -P, got " + p.to_string());
  const Rat m(static_cast<long>(curve.field().m()));
  CurvePoint out(QuadElem(Rat(m * p.x().a())), QuadElem(Rat(m * m * p.y().b())));
  require_on_curve(target, out);
  return out;
}

CurvePoint twist_ascend(const Curve& curve, const CurvePoint& p) {
  Curve source = twist(curve);
  require_on_curve(source, p);
  if (p.is_infinity()) return p;
  const Rat m(static_cast<long>(curve.field().m()));
  CurvePoint out(QuadElem(Rat(p.x().a() / m)),
                 QuadElem(Rat(0), Rat(p.y().a() / (m * m)), curve.field()));
  require_on_curve(curve, out);
  return out;
}

}  // namespace thetacong
