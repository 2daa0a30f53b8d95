// Copyright 2026 The thetacong Authors.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "thetacong/curve.hpp"

namespace thetacong {

enum class TorsionShape { Z2xZ2, Z2xZ4, Z2xZ6, Z2xZ8 };

std::string to_string(TorsionShape shape);
/// Order of the cyclic factor: 2, 4, 6 or 8.
int cyclic_order(TorsionShape shape);

/// A torsion subgroup together with every point of maximal order in it
/// (empty for Z2xZ2).
struct TorsionClass {
  TorsionShape shape = TorsionShape::Z2xZ2;
  std::vector<CurvePoint> witnesses;
  /// False when the classifying theorem's hypotheses fail for the input.
  bool theorem_applies = true;
  std::vector<std::string> notes;
};

/// Torsion of E_{n,theta}(Q) from Fujiwara's parametric criteria, with
/// witnesses attached from explicit division points.
TorsionClass torsion_Q(std::int64_t n, const Angle& angle);

/// Torsion of E_{n,theta}(Q(sqrt m)). Hypotheses gcd(m, n) = 1 and
/// mn not in {2, 3, 6}; violations are noted and the group is still
/// computed by halving.
TorsionClass torsion_K(std::int64_t n, const Angle& angle, std::int64_t m);

/// Torsion of a curve over its own field computed directly: iterated
/// halving of the 2-torsion plus rational roots of the 3-division
/// polynomial. Independent of the parametric criteria.
TorsionClass torsion_structural(const Curve& curve);

/// Points of exact order 3 on the curve (over its field).
std::vector<CurvePoint> three_torsion(const Curve& curve);

/// The closed-form order-4 points printed for the two exceptional cases of
/// the quadratic-field classification (m = sqf(2r(r-s)) with n = sqf(2r)
/// or n = sqf(r-s)). Kept for cross-checking only.
struct PrintedOrder4 {
  int case_number = 0;  // 1 or 2
  std::vector<CurvePoint> points;
};
std::optional<PrintedOrder4> printed_order4_points(std::int64_t n, const Angle& angle,
                                                   std::int64_t m);

}  // namespace thetacong
