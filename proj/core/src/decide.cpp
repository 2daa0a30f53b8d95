// Copyright 2026 The thetacong Authors.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#include "thetacong/decide.hpp"

#include <numeric>

#include "thetacong/errors.hpp"
#include "thetacong/point_search.hpp"
#include "thetacong/torsion.hpp"

namespace thetacong {

namespace {

Int big(std::int64_t v) { return Int(static_cast<long>(v)); }

// psi(2P) with the sign of 2P chosen so that y >= 0.
Triangle triangle_from_point(const Curve& curve, const CurvePoint& p) {
  CurvePoint q = dbl(curve, p);
  if (quad_sign(q.y()) < 0) q = neg(q);
  return psi(curve, q);
}

bool small_n(std::int64_t n) { return n == 1 || n == 2 || n == 3 || n == 6; }

}  // namespace

std::string to_string(Verdict v) { return v == Verdict::Congruent ? "congruent" : "unknown"; }

std::string to_string(WitnessSource s) {
  switch (s) {
    case WitnessSource::EnQ: return "E_n/Q";
    case WitnessSource::EmnQ: return "E_mn/Q";
    case WitnessSource::Torsion: return "torsion";
  }
  return "?";
}

std::vector<std::string> hypothesis_notes(std::int64_t n, std::int64_t m, const Angle& angle) {
  std::vector<std::string> notes;
  if (std::gcd(n, m) != 1) notes.push_back("gcd(m, n) = " + std::to_string(std::gcd(n, m)) + " != 1");
  const Int mn = big(m) * big(n);
  if (mn == 2 || mn == 3 || mn == 6) notes.push_back("mn = " + mn.get_str() + " is in {2, 3, 6}");
  if (big(m) == angle.sqf_2r_r_minus_s())
    notes.push_back("m = sqf(2r(r-s)): E_n may gain order-4 torsion over K");
  return notes;
}

Decision decide(std::int64_t n, std::int64_t m, const Angle& angle, const SearchBudget& budget) {
  if (n < 1 || !is_squarefree(big(n))) throw DomainError("n must be a positive squarefree integer");
  if (m < 2 || !is_squarefree(big(m))) throw DomainError("m must be a squarefree integer > 1");
  budget.validate();

  Decision d;
  d.budget = budget;
  d.notes = hypothesis_notes(n, m, angle);
  const Field Q = Field::rationals();
  const Field K = Field::quadratic(m);

  const Curve en(n, angle, Q);
  if (auto p = first_point_of_order_gt2(en, budget)) {
    const Triangle t = triangle_from_point(en, *p).scaled(QuadElem(1), n, K);
    std::string why = "point of order > 2 on E_n(Q): n is theta-congruent over Q";
    if (point_order(en, *p)) why += " (torsion point; n in {1, 2, 3, 6} case)";
    d.verdict = Verdict::Congruent;
    d.witness = Witness{t, *p, WitnessSource::EnQ, why};
    return d;
  }

  const Int mn = big(m) * big(n);
  if (is_squarefree(mn) && mn.fits_slong_p()) {
    const Curve emn(mn.get_si(), angle, Q);
    if (auto p = first_point_of_order_gt2(emn, budget)) {
      const Triangle rational = triangle_from_point(emn, *p);
      const Triangle t = rational.scaled(QuadElem::sqrt_m(K) / QuadElem(Rat(big(m))), n, K);
      std::string why = "point of order > 2 on E_mn(Q): mn is theta-congruent over Q";
      if (point_order(emn, *p)) why += " (torsion point)";
      d.verdict = Verdict::Congruent;
      d.witness = Witness{t, *p, WitnessSource::EmnQ, why};
      return d;
    }
  } else {
    d.notes.push_back("mn is not squarefree; E_mn route skipped");
  }

  // Torsion points of order > 2 over K that do not come from Q.
  const Curve ek(n, angle, K);
  const TorsionClass tc = torsion_structural(ek);
  for (const CurvePoint& p : tc.witnesses) {
    try {
      const Triangle t = triangle_from_point(ek, p);
      d.verdict = Verdict::Congruent;
      d.witness = Witness{t, p, WitnessSource::Torsion,
                          "torsion point of order " + std::to_string(cyclic_order(tc.shape)) +
                              " over K; the rank equivalence does not apply"};
      return d;
    } catch (const NotInImage&) {
    }
  }
  if (small_n(n)) d.notes.push_back("n in {1, 2, 3, 6}: torsion routes were attempted");
  d.notes.push_back("no witness below the search budget");
  return d;
}

}  // namespace thetacong
