// Copyright 2026 The thetacong Authors.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

// JSON encodings. Rationals are exact strings "p/q"; quadratic elements are
// {"a","b","m"} with m null over Q.

#pragma once

#include <nlohmann/json.hpp>

#include "thetacong/construct.hpp"
#include "thetacong/decide.hpp"
#include "thetacong/obstruct.hpp"
#include "thetacong/torsion.hpp"

namespace thetacong {

using Json = nlohmann::json;

Json to_json(const Rat& q);
Rat rat_from_json(const Json& j);

Json to_json(const QuadElem& x);
QuadElem quad_from_json(const Json& j);

Json to_json(const CurvePoint& p);
CurvePoint point_from_json(const Json& j, const Field& field);

Json to_json(const Curve& c);
Curve curve_from_json(const Json& j);

Json to_json(const Triangle& t);
Triangle triangle_from_json(const Json& j);

Json type_report(TriangleType type);
Json to_json(const Provenance& p);
Json to_json(const SearchResult& r);
Json to_json(const ObstructionReport& r);
Json to_json(const TorsionClass& t);
Json to_json(const Decision& d);
Json to_json(const Composition& c);

}  // namespace thetacong
