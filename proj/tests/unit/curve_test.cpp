// Copyright 2026 The thetacong Authors.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#include <doctest.h>

#include <algorithm>

#include "generators.hpp"
#include "thetacong/curve.hpp"
#include "thetacong/errors.hpp"

using namespace thetacong;

namespace {

const Angle kPi3(2, 1);
QuadElem q(long a, long b = 1) { return QuadElem(make_rat(a, b)); }

// P, Q and -(P + Q) on one line (or P = Q tangent), checked by a 3x3
// determinant in projective coordinates.
bool collinear(const CurvePoint& a, const CurvePoint& b, const CurvePoint& c) {
  const QuadElem det = a.x() * (b.y() - c.y()) - a.y() * (b.x() - c.x()) + (b.x() * c.y() - c.x() * b.y());
  return det.is_zero();
}

}  // namespace

TEST_CASE("angles") {
  CHECK(Angle(2, 1).cos() == make_rat(1, 2));
  CHECK(Angle::from_cos(make_rat(-2, 4)) == Angle(2, -1));
  CHECK(Angle::parse("-1/2") == Angle(2, -1));
  CHECK(Angle::parse("47/128").r() == 128);
  for (auto [r, s] : std::vector<std::pair<int, int>>{{2, 2}, {1, 1}, {4, 2}, {2, 0}, {-2, 1}, {3, -3}})
    CHECK_THROWS_AS(Angle(r, s), DomainError);
  CHECK_THROWS_AS(Angle::parse("x"), DomainError);
  CHECK_THROWS_AS(Angle::parse("1"), DomainError);
  CHECK(kPi3.alpha_sq() == 3);
  CHECK(kPi3.sqf_2r_r_minus_s() == 1);
  CHECK(kPi3.sqf_2r_r_plus_s() == 3);
  CHECK(Angle(2, -1).sqf_2r_r_minus_s() == 3);
  CHECK(Angle(2, -1).to_string() == "-1/2");
}

TEST_CASE("curves and points") {
  const Curve e39(39, kPi3, Field::rationals());
  CHECK(e39.a2() == 78);
  CHECK(e39.a4() == -3 * 39 * 39);
  CHECK(e39.roots() == std::array<Rat, 3>{0, -117, 39});
  CHECK(is_on_curve(e39, CurvePoint(q(-9), q(-216))));
  CHECK(is_on_curve(e39, CurvePoint(q(75), q(-720))));
  CHECK(!is_on_curve(e39, CurvePoint(q(75), q(720 + 1))));
  CHECK(is_on_curve(e39, CurvePoint::infinity()));
  CHECK_THROWS_AS(Curve(4, kPi3, Field::rationals()), DomainError);
  CHECK_THROWS_AS(Curve(0, kPi3, Field::rationals()), DomainError);
}

TEST_CASE("group law identities") {
  const Curve e39(39, kPi3, Field::rationals());
  const CurvePoint p1(q(-9), q(-216)), p2(q(75), q(-720)), inf = CurvePoint::infinity();
  CHECK(add(e39, p1, inf) == p1);
  CHECK(add(e39, p1, neg(p1)) == inf);
  CHECK(add(e39, p1, p2) == add(e39, p2, p1));
  CHECK(dbl(e39, p1) == add(e39, p1, p1));
  CHECK(dbl(e39, p1).x() == q(1849, 16));
  CHECK(sub(e39, add(e39, p1, p2), p2) == p1);
  CHECK(collinear(p1, p2, neg(add(e39, p1, p2))));
  for (const auto& t : two_torsion(e39)) CHECK(dbl(e39, t) == inf);
  CurvePoint acc = inf;
  for (int k = 0; k <= 6; ++k) {
    CHECK(scalar_mul(e39, k, p1) == acc);
    CHECK(scalar_mul(e39, -k, p1) == neg(acc));
    acc = add(e39, acc, p1);
  }
  CHECK_THROWS_AS(add(e39, CurvePoint(q(1), q(1)), p1), DomainError);
  const Curve other(3, kPi3, Field::quadratic(13));
  CHECK_THROWS_AS(add(other, p1, p1), DomainError);
}

TEST_CASE("group law over Q(sqrt 13): chords through three points") {
  const gen::Group g = gen::sample_group();
  for (int i = -2; i <= 2; ++i)
    for (int j = -2; j <= 2; ++j) {
      const CurvePoint a = gen::combine(g, i, j, 1), b = gen::combine(g, 1, i, j);
      const CurvePoint c = add(g.curve, a, b);
      if (a.is_infinity() || b.is_infinity() || c.is_infinity() || a == b) continue;
      CHECK(is_on_curve(g.curve, c));
      CHECK(collinear(a, b, neg(c)));
    }
}

TEST_CASE("2E membership and halving") {
  const Curve e39(39, kPi3, Field::rationals());
  const CurvePoint p1(q(-9), q(-216));
  CHECK(!is_in_2E(e39, p1));
  const CurvePoint d = dbl(e39, p1);
  CHECK(is_in_2E(e39, d));
  const auto halves = halve(e39, d);
  CHECK(halves.size() == 4);
  CHECK(std::find(halves.begin(), halves.end(), p1) != halves.end());
  for (const auto& h : halves) CHECK(dbl(e39, h) == d);
  CHECK(halve(e39, p1).empty());

  const Curve e1(1, kPi3, Field::rationals());
  const auto quarter = halve_two_torsion(e1, 1);
  CHECK(std::find(quarter.begin(), quarter.end(), CurvePoint(q(3), q(6))) != quarter.end());
  CHECK(std::find(quarter.begin(), quarter.end(), CurvePoint(q(3), q(-6))) != quarter.end());
  for (const auto& h : quarter) CHECK(dbl(e1, h) == CurvePoint(q(1), q(0)));
  CHECK(halve_two_torsion(e1, 0).empty());
  CHECK_THROWS_AS(halve_two_torsion(e1, 5), DomainError);
}

TEST_CASE("point orders") {
  const Curve e1(1, kPi3, Field::rationals());
  CHECK(point_order(e1, CurvePoint::infinity()) == 1);
  CHECK(point_order(e1, CurvePoint(q(0), q(0))) == 2);
  CHECK(point_order(e1, CurvePoint(q(3), q(6))) == 4);
  const Curve e39(39, kPi3, Field::rationals());
  CHECK(!point_order(e39, CurvePoint(q(-9), q(-216))).has_value());
}

TEST_CASE("twists between E_n over K and E_mn over Q") {
  const Field k = Field::quadratic(13);
  const Curve e3(3, kPi3, k);
  CHECK(twist(e3) == Curve(39, kPi3, Field::rationals()));
  const CurvePoint p1(q(-9), q(-216));
  const CurvePoint up = twist_ascend(e3, p1);
  CHECK(up.x() == q(-9, 13));
  CHECK(up.y() == QuadElem(Rat(0), make_rat(-216, 169), k));
  CHECK(twist_descend(e3, up) == p1);
  CHECK(twist_descend(e3, CurvePoint(q(13, 4), QuadElem(Rat(0), make_rat(7, 8), k))) ==
        CurvePoint(q(169, 4), q(1183, 8)));
  const Field k3 = Field::quadratic(3);
  const Curve e1(1, Angle(2, -1), k3);
  const CurvePoint four(q(3) + QuadElem(Rat(0), Rat(2), k3), q(6) + QuadElem(Rat(0), Rat(4), k3));
  REQUIRE(is_on_curve(e1, four));
  CHECK_THROWS_AS(twist_descend(e1, four), DomainError);
  CHECK_THROWS_AS(twist(Curve(3, kPi3, Field::rationals())), DomainError);
}
