// Copyright 2026 The thetacong Authors.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#pragma once

#include <cstdint>

#include "thetacong/errors.hpp"

namespace thetacong {

/// Bounds for every search in the library.
///
/// Point searches scan x = p/e^2 with |p| <= max_numerator and
/// e <= max_denominator; parameter sweeps scan rationals of height at most
/// max_param.
struct SearchBudget {
  std::int64_t max_numerator = 1'000'000;
  std::int64_t max_denominator = 1'000;
  std::int64_t max_param = 10'000;

  void validate() const {
    if (max_numerator < 1 || max_denominator < 1 || max_param < 1)
      throw DomainError("search budget entries must be positive");
  }
};

}  // namespace thetacong
