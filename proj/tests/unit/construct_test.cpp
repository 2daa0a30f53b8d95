// Copyright 2026 The thetacong Authors.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#include <doctest.h>

#include "thetacong/construct.hpp"
#include "thetacong/errors.hpp"

using namespace thetacong;

namespace {

const Angle kPi3(2, 1);
const Angle k2Pi3(2, -1);
const Field kK = Field::quadratic(13);
const SearchBudget kSmall{20'000, 200, 2'000};

QuadElem q(long a, long b = 1) { return QuadElem(make_rat(a, b)); }
QuadElem k(long a, long b, long den = 1) { return QuadElem(make_rat(a, den), make_rat(b, den), kK); }
Rat r(const char* text) { return parse_rat(text); }

}  // namespace

TEST_CASE("type searches on E_{3, pi/3} over Q(sqrt 13)") {
  const SearchResult t1 = search_type1(3, kPi3, 13, SearchBudget{});
  REQUIRE(t1);
  CHECK(*t1.triangle == Triangle::validate(k(0, 1, 2), k(0, 24, 13), k(0, 43, 26), 3, kPi3, kK));
  CHECK(t1.provenance.method == "type1-twist");
  REQUIRE(t1.provenance.point.has_value());
  CHECK(*t1.provenance.point == CurvePoint(q(-9), q(-216)));

  const SearchResult t2 = search_type2(3, kPi3, 13, kSmall);
  REQUIRE(t2);
  CHECK(*t2.triangle == Triangle::validate(q(3), q(4), k(0, 1), 3, kPi3, kK));
  CHECK(t2.provenance.method == "type2-sweep");
  CHECK(t2.provenance.t == Rat(3));

  const SearchResult t3 = search_type3(3, kPi3, 13, kSmall);
  REQUIRE(t3);
  CHECK(*t3.triangle == Triangle::validate(k(5, -1), k(5, 1), q(8), 3, kPi3, kK));
  CHECK(t3.provenance.method == "type3-parametrization");
  CHECK(t3.provenance.base == std::pair<Rat, Rat>{5, 1});
  CHECK(!t3.provenance.t.has_value());

  const SearchResult t4 = search_type4(3, kPi3, 13, kSmall);
  REQUIRE(t4);
  CHECK(*t4.triangle == Triangle::validate(k(-1, 1), k(1, 1), q(4), 3, kPi3, kK));
  CHECK(t4.provenance.base == std::pair<Rat, Rat>{1, 1});
}

TEST_CASE("type searches on E_{17, 2pi/3} over Q(sqrt 13)") {
  const SearchResult t1 = search_type1(17, k2Pi3, 13, SearchBudget{});
  REQUIRE(t1);
  CHECK(*t1.provenance.point == CurvePoint(q(-13), q(-1352)));
  CHECK(classify(*t1.triangle) == TriangleType::Type1);
  CHECK(*search_type2(17, k2Pi3, 13, kSmall).triangle ==
        Triangle::validate(q(1), q(68), k(0, 19), 17, k2Pi3, kK));
  CHECK(*search_type3(17, k2Pi3, 13, kSmall).triangle ==
        Triangle::validate(k(9, -1), k(9, 1), q(16), 17, k2Pi3, kK));
  CHECK(*search_type4(17, k2Pi3, 13, kSmall).triangle ==
        Triangle::validate(k(-7, 3), k(7, 3), q(20), 17, k2Pi3, kK));
}

TEST_CASE("conic parametrization") {
  CHECK(conic_base_point(12, 13, 10) == std::pair<Rat, Rat>{5, 1});
  CHECK(conic_base_point(-12, 13, 10) == std::pair<Rat, Rat>{1, 1});
  CHECK(!conic_base_point(-4, 3, 200).has_value());

  const auto uv = conic_parametrize({5, 1}, 13, r("13/4"));
  CHECK(uv == std::pair<Rat, Rat>{r("41/3"), r("11/3")});
  const auto t3 = triangle_from_conic_point(3, uv.first, uv.second, 3, kPi3, 13);
  REQUIRE(t3.has_value());
  CHECK(t3->W() == q(80, 3));
  CHECK(classify(*t3) == TriangleType::Type3);

  const auto uv4 = conic_parametrize({1, 1}, 13, 8);
  CHECK(uv4 == std::pair<Rat, Rat>{r("131/51"), r("61/51")});
  const auto t4 = triangle_from_conic_point(4, uv4.first, uv4.second, 3, kPi3, 13);
  REQUIRE(t4.has_value());
  CHECK(t4->W() == q(316, 51));
  CHECK(phi(*t4).x() == q(24964, 2601));

  for (long p = -9; p <= 9; ++p)
    for (long d = 1; d <= 5; ++d) {
      const auto [u, v] = conic_parametrize({5, 1}, 13, make_rat(p, d));
      CHECK(u * u - 13 * v * v == 12);
    }
  CHECK_THROWS_AS(triangle_from_conic_point(2, 5, 1, 3, kPi3, 13), DomainError);
}

TEST_CASE("obstructed conics are skipped") {
  const SearchResult t4 = search_type4(1, kPi3, 3, kSmall);
  CHECK(!t4);
  REQUIRE(!t4.notes.empty());
  CHECK(t4.notes.front().find("no local point at") != std::string::npos);
}

TEST_CASE("search results satisfy their invariants") {
  for (std::int64_t n : {1, 2, 3, 5}) {
    for (std::int64_t m : {2, 3, 5, 7, 13}) {
      if (n == m) continue;
      for (const Angle& a : {kPi3, k2Pi3, Angle(3, 1)}) {
        for (int type = 1; type <= 4; ++type) {
          const SearchResult res = search_type(type, n, a, m, SearchBudget{2'000, 40, 300});
          if (!res) continue;
          CAPTURE(res.triangle->to_string());
          const Triangle& t = *res.triangle;
          CHECK(Triangle::validate(t.U(), t.V(), t.W(), n, a, Field::quadratic(m)) == t);
          CHECK(type_tag(classify(t)) == std::to_string(type));
          CHECK(psi(Curve(n, a, Field::quadratic(m)), phi(t)) == t);
          if (type >= 2) CHECK_NOTHROW(to_conic_point(t));
        }
      }
    }
  }
  CHECK_THROWS_AS(search_type(5, 3, kPi3, 13, kSmall), DomainError);
  CHECK_THROWS_AS(search_type2(4, kPi3, 13, kSmall), DomainError);
  CHECK_THROWS_AS(search_type2(3, kPi3, 9, kSmall), DomainError);
}

TEST_CASE("composition of two rational triangles") {
  const Field q0 = Field::rationals();
  struct Case {
    Triangle t1, t2;
    std::int64_t m;
  };
  const std::vector<Case> cases{
      {Triangle::validate(r("55/12"), r("48/5"), r("499/60"), 11, kPi3, q0),
       Triangle::validate(8, r("55/2"), r("49/2"), 55, kPi3, q0), 5},
      {Triangle::validate(r("544/105"), r("1995/136"), r("254659/14280"), 19, k2Pi3, q0),
       Triangle::validate(5, r("456/5"), r("469/5"), 114, k2Pi3, q0), 6},
  };
  for (const auto& c : cases) {
    const Composition out = compose(c.t1, c.t2, c.m);
    const Triangle& t = out.triangle;
    CHECK(t.n() == c.t1.n());
    CHECK(t.U() * t.V() == QuadElem(2 * c.t1.angle().r() * c.t1.n()));
    CHECK(out.closed_form_matches);
    CHECK(out.radical_check);
    CHECK(out.w_irrational);
    CHECK(out.w_sqrt_m_irrational);
    CHECK(out.point.x() == QuadElem(out.closed_a, out.closed_b, Field::quadratic(c.m)));
    CHECK_THROWS_AS(classify(t), OutsideClassification);
  }
  CHECK_THROWS_AS(compose(cases[0].t1, cases[0].t2, 7), DomainError);
  CHECK_THROWS_AS(compose(cases[0].t1, cases[1].t2, 6), DomainError);
  CHECK_THROWS_AS(compose(cases[0].t1, cases[0].t2, 4), DomainError);
}
