// Copyright 2026 The thetacong Authors.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

// Quadratic-residue prefilter for the inner loops of the searches.

#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace thetacong::detail {

inline constexpr std::array<std::int64_t, 7> kFilterModuli{64, 63, 65, 11, 17, 19, 23};

inline const std::array<std::vector<bool>, kFilterModuli.size()>& square_tables() {
  static const auto tables = [] {
    std::array<std::vector<bool>, kFilterModuli.size()> t;
    for (std::size_t i = 0; i < kFilterModuli.size(); ++i) {
      const std::int64_t mod = kFilterModuli[i];
      t[i].assign(static_cast<std::size_t>(mod), false);
      for (std::int64_t z = 0; z < mod; ++z) t[i][static_cast<std::size_t>(z * z % mod)] = true;
    }
    return t;
  }();
  return tables;
}

inline std::int64_t mod_pos(std::int64_t v, std::int64_t mod) {
  std::int64_t r = v % mod;
  return r < 0 ? r + mod : r;
}

/// False when value_mod(M) shows the value is not a square modulo some M.
/// value_mod must return a residue in [0, M).
template <typename ValueMod>
bool may_be_square(ValueMod&& value_mod) {
  const auto& tables = square_tables();
  for (std::size_t i = 0; i < kFilterModuli.size(); ++i)
    if (!tables[i][static_cast<std::size_t>(value_mod(kFilterModuli[i]))]) return false;
  return true;
}

}  // namespace thetacong::detail
