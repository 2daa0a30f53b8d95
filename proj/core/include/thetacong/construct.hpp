// Copyright 2026 The thetacong Authors.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

// Searches for (K, theta, n)-triangles of each type, and composition of a
// rational n-triangle with a rational mn-triangle.

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "thetacong/budget.hpp"
#include "thetacong/triangle.hpp"

namespace thetacong {

/// How a triangle was found.
struct Provenance {
  /// "type1-twist", "type2-sweep", "type3-parametrization", "type4-parametrization".
  std::string method;
  /// Base point (u0, v0) of the conic, for the parametrizations.
  std::optional<std::pair<Rat, Rat>> base;
  /// Sweep parameter; absent when the base point itself was accepted.
  std::optional<Rat> t;
  /// The rational point the triangle came from, for the twist route.
  std::optional<CurvePoint> point;
};

struct SearchResult {
  std::optional<Triangle> triangle;
  Provenance provenance;
  std::vector<std::string> notes;

  explicit operator bool() const { return triangle.has_value(); }
};

/// Type 1: a rational triangle of area mn*alpha from E_{mn}(Q), divided by
/// sqrt(m).
SearchResult search_type1(std::int64_t n, const Angle& angle, std::int64_t m,
                          const SearchBudget& budget);

/// Type 2: U = p/q rational of height <= max_param, V = 2rn/U, W^2/m a
/// rational square.
SearchResult search_type2(std::int64_t n, const Angle& angle, std::int64_t m,
                          const SearchBudget& budget);

/// Types 3 and 4: rational points on u^2 - m v^2 = 2rn (Type 3) or
/// m v^2 - u^2 = 2rn (Type 4) with 2u^2 + 2m v^2 - 4sn a rational square.
SearchResult search_type3(std::int64_t n, const Angle& angle, std::int64_t m,
                          const SearchBudget& budget);
SearchResult search_type4(std::int64_t n, const Angle& angle, std::int64_t m,
                          const SearchBudget& budget);

/// Dispatches on type 1..4.
SearchResult search_type(int type, std::int64_t n, const Angle& angle, std::int64_t m,
                         const SearchBudget& budget);

/// The smallest rational point (u0, v0) = (a/c, b/c) with a, b, c >= 0 on
/// u^2 - m v^2 = c0, ordered by max(b, c) then b. Height bound max_height.
std::optional<std::pair<Rat, Rat>> conic_base_point(const Int& c0, std::int64_t m,
                                                    std::int64_t max_height);

/// Second intersection of u^2 - m v^2 = const with the line of slope
/// parameter t through the base point.
std::pair<Rat, Rat> conic_parametrize(const std::pair<Rat, Rat>& base, std::int64_t m,
                                      const Rat& t);

/// (u - v sqrt m, u + v sqrt m, W) for Type 3, (-u + v sqrt m, u + v sqrt m, W)
/// for Type 4, with |u|, |v| used and W^2 = 2u^2 + 2mv^2 - 4sn. nullopt when
/// W is not rational or the triangle degenerates.
std::optional<Triangle> triangle_from_conic_point(int type, const Rat& u, const Rat& v,
                                                  std::int64_t n, const Angle& angle,
                                                  std::int64_t m);

struct Composition {
  Triangle triangle;
  /// phi(T1) + phi(T2 / sqrt m), sign-normalized to y >= 0.
  CurvePoint point;
  /// Closed-form value of x(P) = a + b sqrt m.
  Rat closed_a, closed_b;
  bool closed_form_matches = false;
  /// W = 2(alpha + beta sqrt m) with beta = b / (2 alpha).
  bool radical_check = false;
  bool w_irrational = false;       // W not in Q
  bool w_sqrt_m_irrational = false;  // W sqrt(m) not in Q
};

/// T1: rational triangle with area n*alpha; T2: rational triangle with area
/// mn*alpha, same angle. Throws DegenerateSum when W2^2 = m W1^2.
Composition compose(const Triangle& t1, const Triangle& t2, std::int64_t m);

}  // namespace thetacong
