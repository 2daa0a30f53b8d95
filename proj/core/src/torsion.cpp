// Copyright 2026 The thetacong Authors.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#include "thetacong/torsion.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "thetacong/errors.hpp"

namespace thetacong {

std::string to_string(TorsionShape shape) {
  switch (shape) {
    case TorsionShape::Z2xZ2: return "Z2xZ2";
    case TorsionShape::Z2xZ4: return "Z2xZ4";
    case TorsionShape::Z2xZ6: return "Z2xZ6";
    case TorsionShape::Z2xZ8: return "Z2xZ8";
  }
  return "?";
}

int cyclic_order(TorsionShape shape) {
  switch (shape) {
    case TorsionShape::Z2xZ2: return 2;
    case TorsionShape::Z2xZ4: return 4;
    case TorsionShape::Z2xZ6: return 6;
    case TorsionShape::Z2xZ8: return 8;
  }
  return 0;
}

namespace {

Int big(std::int64_t v) { return Int(static_cast<long>(v)); }

Int pow4(const Int& v) { return v * v * v * v; }

// All positive divisors of a4^2 where a4 = (r^2 - s^2) n^2.
std::vector<Int> divisors_of_a4_squared(const Curve& curve) {
  const Int r = big(curve.angle().r()), s = big(curve.angle().s()), n = big(curve.n());
  std::map<Int, unsigned> exps;
  // a4^2 = (r-s)^2 (r+s)^2 n^4
  for (auto [p, e] : factorize(r - s)) exps[p] += 2 * e;
  for (auto [p, e] : factorize(r + s)) exps[p] += 2 * e;
  for (auto [p, e] : factorize(n)) exps[p] += 4 * e;
  std::vector<Int> divs{1};
  for (const auto& [p, e] : exps) {
    std::size_t base = divs.size();
    Int pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  return divs;
}

void push_unique(std::vector<CurvePoint>& out, const CurvePoint& p) {
  if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
}

}  // namespace

std::vector<CurvePoint> three_torsion(const Curve& curve) {
  // psi_3(x) = 3x^4 + 4 a2 x^3 + 6 a4 x^2 - a4^2; rational roots are d/q
  // with d | a4^2 and q | 3.
  const Rat a2(curve.a2()), a4(curve.a4());
  auto psi3 = [&](const Rat& x) {
    Rat x2 = x * x;
    return Rat(3 * x2 * x2 + 4 * a2 * x2 * x + 6 * a4 * x2 - a4 * a4);
  };
  std::vector<CurvePoint> out;
  for (const Int& d : divisors_of_a4_squared(curve)) {
    for (int q : {1, 3}) {
      for (int sign : {1, -1}) {
        Rat x = make_rat(sign * d, q);
        if (psi3(x) != 0) continue;
        auto y = sqrt_in(curve.cubic(QuadElem(x)), curve.field());
        if (!y || y->is_zero()) continue;
        for (const QuadElem& yy : {*y, -*y}) {
          CurvePoint p(QuadElem(x), yy.in(curve.field()));
          if (point_order(curve, p, 3) == 3) push_unique(out, p);
        }
      }
    }
  }
  return out;
}

TorsionClass torsion_structural(const Curve& curve) {
  std::vector<CurvePoint> order4, order8;
  for (const Rat& e : curve.roots())
    for (const CurvePoint& p : halve_two_torsion(curve, e)) push_unique(order4, p);
  for (const CurvePoint& p : order4)
    for (const CurvePoint& q : halve(curve, p)) push_unique(order8, q);
  for (const CurvePoint& p : order8)
    if (!halve(curve, p).empty())
      throw OutsideClassification("torsion contains Z/16 on " + curve.to_string());

  std::vector<CurvePoint> order3 = three_torsion(curve);
  TorsionClass out;
  if (!order3.empty()) {
    if (!order4.empty())
      throw OutsideClassification("torsion contains Z/12 on " + curve.to_string());
    out.shape = TorsionShape::Z2xZ6;
    auto t2 = two_torsion(curve);
    for (const CurvePoint& p : order3)
      for (int i = 1; i < 4; ++i) push_unique(out.witnesses, add(curve, p, t2[i]));
    return out;
  }
  if (!order8.empty()) {
    out.shape = TorsionShape::Z2xZ8;
    out.witnesses = std::move(order8);
  } else if (!order4.empty()) {
    out.shape = TorsionShape::Z2xZ4;
    out.witnesses = std::move(order4);
  }
  return out;
}

namespace {

// Part (1): Z2xZ8. n = 1: r = 8 a^4 b^4, r - s = (a^2 - b^2)^4, b < a < (1+sqrt2) b;
// n = 2: r = (a^2 - b^2)^4, r - s = 32 a^4 b^4, a > (1+sqrt2) b.
bool fujiwara_z8(std::int64_t n, const Int& r, const Int& s) {
  auto admissible = [](const Int& a, const Int& b) {
    return gcd(a, b) == 1 && ((a + b) % 2) != 0;
  };
  if (n == 1) {
    for (Int b = 1; 8 * pow4(b) <= r; ++b)
      for (Int a = b + 1; 8 * pow4(a) * pow4(b) <= r; ++a) {
        if (!admissible(a, b)) continue;
        Int d = a - b;
        if (d * d >= 2 * b * b) continue;
        if (r == 8 * pow4(a) * pow4(b) && r - s == pow4(a * a - b * b)) return true;
      }
  } else if (n == 2) {
    for (Int a = 2; pow4(2 * a - 1) <= r; ++a)
      for (Int b = 1; b < a; ++b) {
        if (!admissible(a, b)) continue;
        Int d = a - b;
        if (d * d <= 2 * b * b) continue;
        if (r == pow4(a * a - b * b) && r - s == 32 * pow4(a) * pow4(b)) return true;
      }
  }
  return false;
}

// Part (2): Z2xZ6 with X = (u-v)^3 (u+v), Y = u^3 (u-2v), gcd(u,v) = 1, u > 2v.
bool fujiwara_z6(std::int64_t n, const Int& r, const Int& s) {
  if (n != 1 && n != 2 && n != 3 && n != 6) return false;
  for (Int u = 3; u * u * u * u <= 32 * r; ++u)
    for (Int v = 1; 2 * v < u; ++v) {
      if (gcd(u, v) != 1) continue;
      Int w = u - v;
      Int x = w * w * w * (u + v);
      Int y = u * u * u * (u - 2 * v);
      bool hit = false;
      switch (n) {
        case 1: hit = (2 * r == x) && (r + s == y); break;
        case 2: hit = (r == x) && (r + s == 2 * y); break;
        case 3: hit = (6 * r == x) && (3 * (r + s) == y); break;
        case 6: hit = (3 * r == x) && (3 * (r + s) == 2 * y); break;
      }
      if (hit) return true;
    }
  return false;
}

bool is_sq(const Int& v) { return is_square_int(v).has_value(); }

}  // namespace

TorsionClass torsion_Q(std::int64_t n, const Angle& angle) {
  const Curve curve(n, angle, Field::rationals());
  const Int r = big(angle.r()), s = big(angle.s());

  TorsionShape shape = TorsionShape::Z2xZ2;
  if (fujiwara_z8(n, r, s))
    shape = TorsionShape::Z2xZ8;
  else if (fujiwara_z6(n, r, s))
    shape = TorsionShape::Z2xZ6;
  else if (n == 1 && is_sq(2 * r) && is_sq(r - s))
    shape = TorsionShape::Z2xZ4;
  else if (n == 2 && is_sq(r) && is_sq(2 * (r - s)))
    shape = TorsionShape::Z2xZ4;

  TorsionClass out;
  out.shape = shape;
  if (shape == TorsionShape::Z2xZ2) return out;

  TorsionClass explicit_points = torsion_structural(curve);
  if (explicit_points.shape != shape)
    out.notes.push_back("explicit division points give " + to_string(explicit_points.shape));
  const int order = cyclic_order(shape);
  for (const CurvePoint& p : explicit_points.witnesses)
    if (point_order(curve, p, order) == order) out.witnesses.push_back(p);
  return out;
}

TorsionClass torsion_K(std::int64_t n, const Angle& angle, std::int64_t m) {
  const Field field = Field::quadratic(m);
  const Curve curve(n, angle, field);

  std::vector<std::string> violations;
  if (std::gcd(n, m) != 1) violations.push_back("gcd(m, n) != 1");
  const std::int64_t mn = m * n;
  if (mn == 2 || mn == 3 || mn == 6) violations.push_back("mn in {2, 3, 6}");
  if (torsion_Q(n, angle).shape != TorsionShape::Z2xZ2)
    violations.push_back("torsion of E_n(Q) is larger than Z2xZ2");

  TorsionClass out = torsion_structural(curve);
  out.theorem_applies = violations.empty();
  for (const std::string& v : violations) out.notes.push_back("theorem inapplicable: " + v);

  const Int r = big(angle.r()), s = big(angle.s()), nn = big(n);
  const bool squares = sqrt_in(QuadElem(Rat((r - s) * nn)), field).has_value() &&
                       sqrt_in(QuadElem(Rat(2 * r * nn)), field).has_value();
  if (out.theorem_applies) {
    const TorsionShape predicted = squares ? TorsionShape::Z2xZ4 : TorsionShape::Z2xZ2;
    if (predicted != out.shape)
      out.notes.push_back("halving disagrees with the (r-s)n, 2rn square test");
    if (auto printed = printed_order4_points(n, angle, m)) {
      out.notes.push_back("exceptional case (" + std::to_string(printed->case_number) +
                          "): m = sqf(2r(r-s))");
    } else {
      out.notes.push_back("generic case: only 2-torsion expected");
    }
  }
  return out;
}

std::optional<PrintedOrder4> printed_order4_points(std::int64_t n, const Angle& angle,
                                                   std::int64_t m) {
  const Int r = big(angle.r()), s = big(angle.s()), nn = big(n), mm = big(m);
  const SqfDecomp two_r_rs = sqf_decompose(2 * r * (r - s));
  if (two_r_rs.core != mm) return std::nullopt;
  const Int d = two_r_rs.root;

  PrintedOrder4 out;
  Int scale;  // h or k
  const SqfDecomp two_r = sqf_decompose(2 * r);
  const SqfDecomp r_minus_s = sqf_decompose(r - s);
  if (nn == two_r.core) {
    out.case_number = 1;
    scale = two_r.root;
  } else if (nn == r_minus_s.core) {
    out.case_number = 2;
    scale = r_minus_s.root;
  } else {
    return std::nullopt;
  }

  const Field field = Field::quadratic(m);
  const Rat x0(nn * scale * nn * scale);
  const Rat xs(nn * d);
  const Rat y0 = make_rat(d * d * mm * nn, scale);
  const Rat ys(nn * nn * scale * d);
  for (int sign : {-1, 1}) {
    QuadElem x(x0, Rat(sign * xs), field);
    QuadElem y(y0, Rat(sign * ys), field);
    out.points.emplace_back(x, y);
    out.points.emplace_back(x, -y);
  }
  return out;
}

}  // namespace thetacong
