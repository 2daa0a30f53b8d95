// Copyright 2026 The thetacong Authors.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#include <doctest.h>

#include <algorithm>

#include "thetacong/decide.hpp"
#include "thetacong/errors.hpp"

using namespace thetacong;

namespace {

const Angle kPi3(2, 1);
const Angle k2Pi3(2, -1);

bool has_note(const std::vector<std::string>& notes, const std::string& text) {
  return std::find(notes.begin(), notes.end(), text) != notes.end();
}

}  // namespace

TEST_CASE("decide through E_mn(Q)") {
  const Decision d = decide(3, 13, kPi3, SearchBudget{});
  CHECK(d.verdict == Verdict::Congruent);
  REQUIRE(d.witness.has_value());
  CHECK(d.witness->source == WitnessSource::EmnQ);
  CHECK(classify(d.witness->triangle) == TriangleType::Type1);
  CHECK(d.witness->triangle.field() == Field::quadratic(13));
  CHECK(d.witness->point == CurvePoint(QuadElem(-9), QuadElem(-216)));
  CHECK(to_string(d.witness->source) == "E_mn/Q");
}

TEST_CASE("decide through E_n(Q)") {
  const Decision d = decide(1, 2, kPi3, SearchBudget{});
  CHECK(d.verdict == Verdict::Congruent);
  REQUIRE(d.witness.has_value());
  CHECK(d.witness->source == WitnessSource::EnQ);
  CHECK(d.witness->triangle.U() == QuadElem(2));
  CHECK(d.witness->triangle.W() == QuadElem(2));
  CHECK(has_note(d.notes, "mn = 2 is in {2, 3, 6}"));
}

TEST_CASE("decide through torsion over K") {
  const Decision d = decide(1, 3, k2Pi3, SearchBudget{});
  CHECK(d.verdict == Verdict::Congruent);
  REQUIRE(d.witness.has_value());
  CHECK(d.witness->source == WitnessSource::Torsion);
  const Field k3 = Field::quadratic(3);
  CHECK(d.witness->triangle ==
        Triangle::validate(2, 2, QuadElem(Rat(0), Rat(2), k3), 1, k2Pi3, k3));
  CHECK(d.witness->justification.find("does not apply") != std::string::npos);
  CHECK(has_note(d.notes, "mn = 3 is in {2, 3, 6}"));
  CHECK(has_note(d.notes, "m = sqf(2r(r-s)): E_n may gain order-4 torsion over K"));
}

TEST_CASE("hypothesis notes") {
  CHECK(has_note(hypothesis_notes(3, 6, kPi3), "gcd(m, n) = 3 != 1"));
  CHECK(hypothesis_notes(3, 13, kPi3).empty());
}

TEST_CASE("unknown below a tiny budget") {
  const Decision d = decide(3, 13, kPi3, SearchBudget{1, 1, 1});
  CHECK(d.verdict == Verdict::Unknown);
  CHECK(!d.witness.has_value());
  CHECK(has_note(d.notes, "no witness below the search budget"));
  CHECK(d.budget.max_numerator == 1);
}

TEST_CASE("verdicts are monotone in the budget") {
  for (std::int64_t n : {1, 3, 5, 7}) {
    for (std::int64_t m : {2, 5, 13}) {
      if (n == m) continue;
      const Decision small = decide(n, m, kPi3, SearchBudget{50, 3, 1});
      const Decision large = decide(n, m, kPi3, SearchBudget{5000, 40, 1});
      CAPTURE(n);
      CAPTURE(m);
      if (small.verdict == Verdict::Congruent) CHECK(large.verdict == Verdict::Congruent);
      if (large.witness) {
        const Triangle& t = large.witness->triangle;
        CHECK(Triangle::validate(t.U(), t.V(), t.W(), n, kPi3, Field::quadratic(m)) == t);
      }
    }
  }
}

TEST_CASE("decide rejects bad inputs") {
  CHECK_THROWS_AS(decide(4, 13, kPi3, SearchBudget{}), DomainError);
  CHECK_THROWS_AS(decide(3, 1, kPi3, SearchBudget{}), DomainError);
  CHECK_THROWS_AS(decide(3, 12, kPi3, SearchBudget{}), DomainError);
  CHECK_THROWS_AS(decide(3, 13, kPi3, SearchBudget{1, 0, 1}), DomainError);
}
