// Copyright 2026 The thetacong Authors.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

// Naive height search for rational points on E_{n,theta}(Q).

#pragma once

#include <optional>
#include <vector>

#include "thetacong/budget.hpp"
#include "thetacong/curve.hpp"

namespace thetacong {

/// Every affine point with x = p/e^2 (lowest terms), |p| <= max_numerator,
/// e <= max_denominator. Sorted by height of x, then x, then y.
std::vector<CurvePoint> naive_point_search(const Curve& curve, const SearchBudget& budget);

/// The first point of order > 2 (equivalently y != 0) in the same order,
/// stopping as soon as a height band yields one.
std::optional<CurvePoint> first_point_of_order_gt2(const Curve& curve,
                                                   const SearchBudget& budget);

}  // namespace thetacong
