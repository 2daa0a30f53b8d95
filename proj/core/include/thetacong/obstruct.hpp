// Copyright 2026 The thetacong Authors.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

// Local solvability of the three conics attached to triangles of Types 2,
// 3 and 4. A type with no local point somewhere has no triangle over K.

#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "thetacong/triangle.hpp"

namespace thetacong {

/// Conics for Types 2, 3, 4 in that order:
///   z^2 = m x^2 + m(r^2 - s^2) y^2,
///   z^2 = 2r(r-s) x^2 + 2mr(r+s) y^2,
///   z^2 = 2r(r+s) x^2 + 2mr(r-s) y^2.
/// Coefficients are kept unreduced.
std::array<Conic, 3> conics_for(std::int64_t m, const Angle& angle);

/// The conic of one type (2, 3 or 4).
Conic conic_for(int type, std::int64_t m, const Angle& angle);

/// (A, B) reduced to squarefree representatives.
Conic square_class(const Conic& c);

bool locally_solvable(const Conic& c, const Place& place);

/// Infinity, 2 and the odd primes dividing A*B.
std::vector<Place> relevant_places(const Conic& c);

struct ConicReport {
  int type = 0;
  Conic conic;
  std::vector<Place> checked;
  std::vector<Place> obstructed;
  bool solvable() const { return obstructed.empty(); }
};

/// Residue-table evaluation at one prime, compared with the direct symbol.
struct TableFinding {
  int type = 0;
  Int p;
  int alpha = 0, beta = 0;
  Int a, b;
  /// The tables' verdict for the pair (p^alpha a, p^beta b), when the
  /// shape is covered.
  std::optional<bool> table_obstructed;
  /// Direct symbol of the same pair.
  bool pair_obstructed = false;
  /// Direct symbol of the conic itself.
  bool conic_obstructed = false;

  bool disagrees() const {
    return table_obstructed.has_value() &&
           (*table_obstructed != pair_obstructed || *table_obstructed != conic_obstructed);
  }
  std::string to_string() const;
};

struct ObstructionReport {
  std::int64_t m = 0;
  Angle angle{2, 1};
  std::array<ConicReport, 3> types;  // Types 2, 3, 4
  /// Every prime where the residue tables were evaluated.
  std::vector<TableFinding> table_checks;

  const ConicReport& for_type(int type) const;
  std::vector<TableFinding> disagreements() const;
};

ObstructionReport obstruction_report(std::int64_t m, const Angle& angle);

/// The printed residue conditions for the pair (x, y) = (p^alpha a,
/// p^beta b) at p. nullopt when the shape is not covered ((alpha, beta)
/// = (0, 0) at odd p).
std::optional<bool> table_says_obstructed(const Int& x, const Int& y, const Int& p);

}  // namespace thetacong
