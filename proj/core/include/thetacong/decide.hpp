// Copyright 2026 The thetacong Authors.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

// Certifies n as (K, theta)-congruent by exhibiting a triangle. Rank is
// never computed: a point of order > 2 found by bounded search, or an
// order-4 point over K, is turned into a triangle and validated.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "thetacong/budget.hpp"
#include "thetacong/triangle.hpp"

namespace thetacong {

enum class Verdict { Congruent, Unknown };
enum class WitnessSource { EnQ, EmnQ, Torsion };

std::string to_string(Verdict v);        // "congruent", "unknown"
std::string to_string(WitnessSource s);  // "E_n/Q", "E_mn/Q", "torsion"

struct Witness {
  Triangle triangle;
  /// The point found by the search (on E_n/Q, E_mn/Q, or E_n/K).
  CurvePoint point;
  WitnessSource source;
  /// Which statement licenses the conclusion.
  std::string justification;
};

struct Decision {
  Verdict verdict = Verdict::Unknown;
  std::optional<Witness> witness;
  std::vector<std::string> notes;
  SearchBudget budget;
};

/// Hypothesis violations for (n, m, angle): gcd(m, n) != 1, mn in {2, 3, 6},
/// m = sqf(2r(r-s)).
std::vector<std::string> hypothesis_notes(std::int64_t n, std::int64_t m, const Angle& angle);

/// Routes in order: E_n(Q), E_mn(Q), order-4 torsion over K.
Decision decide(std::int64_t n, std::int64_t m, const Angle& angle, const SearchBudget& budget);

}  // namespace thetacong
