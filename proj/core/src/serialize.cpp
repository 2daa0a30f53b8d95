// Copyright 2026 The thetacong Authors.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#include "thetacong/serialize.hpp"

#include "thetacong/errors.hpp"

namespace thetacong {

namespace {

Field field_from(const Json& m) {
  if (m.is_null()) return Field::rationals();
  const auto v = m.get<std::int64_t>();
  return v == 1 ? Field::rationals() : Field::quadratic(v);
}

Json field_json(const Field& f) { return f.is_rational() ? Json(nullptr) : Json(f.m()); }

Json place_json(const Place& v) {
  return v.is_infinite() ? Json("inf") : Json(v.p().get_si());
}

}  // namespace

Json to_json(const Rat& q) { return to_string(q); }

Rat rat_from_json(const Json& j) {
  if (j.is_string()) return parse_rat(j.get<std::string>());
  if (j.is_number_integer()) return Rat(Int(static_cast<long>(j.get<std::int64_t>())));
  throw DomainError("expected a rational string, got " + j.dump());
}

Json to_json(const QuadElem& x) {
  return {{"a", to_string(x.a())}, {"b", to_string(x.b())}, {"m", field_json(x.field())}};
}

QuadElem quad_from_json(const Json& j) {
  if (!j.is_object()) return QuadElem(rat_from_json(j));
  const Field f = field_from(j.value("m", Json(nullptr)));
  return QuadElem(rat_from_json(j.at("a")), rat_from_json(j.value("b", Json("0"))), f);
}

Json to_json(const CurvePoint& p) {
  if (p.is_infinity()) return "infinity";
  return {{"x", to_json(p.x())}, {"y", to_json(p.y())}};
}

CurvePoint point_from_json(const Json& j, const Field& field) {
  if (j.is_string() && j.get<std::string>() == "infinity") return CurvePoint::infinity();
  return CurvePoint(quad_from_json(j.at("x")).in(field), quad_from_json(j.at("y")).in(field));
}

Json to_json(const Curve& c) {
  return {{"n", c.n()}, {"r", c.angle().r()}, {"s", c.angle().s()}, {"m", field_json(c.field())}};
}

Curve curve_from_json(const Json& j) {
  return Curve(j.at("n").get<std::int64_t>(),
               Angle(j.at("r").get<std::int64_t>(), j.at("s").get<std::int64_t>()),
               field_from(j.value("m", Json(nullptr))));
}

Json to_json(const Triangle& t) {
  return {{"U", to_json(t.U())},       {"V", to_json(t.V())},       {"W", to_json(t.W())},
          {"n", t.n()},                {"r", t.angle().r()},        {"s", t.angle().s()},
          {"m", field_json(t.field())}};
}

Triangle triangle_from_json(const Json& j) {
  const Field f = field_from(j.value("m", Json(nullptr)));
  return Triangle::validate(quad_from_json(j.at("U")), quad_from_json(j.at("V")),
                            quad_from_json(j.at("W")), j.at("n").get<std::int64_t>(),
                            Angle(j.at("r").get<std::int64_t>(), j.at("s").get<std::int64_t>()), f);
}

Json type_report(TriangleType type) { return {{"type", type_tag(type)}}; }

Json to_json(const Provenance& p) {
  Json j{{"method", p.method}};
  if (p.base) j["base"] = {to_string(p.base->first), to_string(p.base->second)};
  if (p.t) j["t"] = to_string(*p.t);
  if (p.point) j["point"] = to_json(*p.point);
  return j;
}

Json to_json(const SearchResult& r) {
  Json j{{"found", r.triangle.has_value()}, {"provenance", to_json(r.provenance)}, {"notes", r.notes}};
  j["triangle"] = r.triangle ? to_json(*r.triangle) : Json(nullptr);
  if (r.triangle) j["type"] = type_tag(classify(*r.triangle));
  return j;
}

Json to_json(const ObstructionReport& r) {
  Json j = Json::object();
  for (const ConicReport& c : r.types) {
    Json obstructed = Json::array();
    for (const Place& v : c.obstructed) obstructed.push_back(place_json(v));
    j["type" + std::to_string(c.type)] = {
        {"solvable", c.solvable()},
        {"obstructed", obstructed},
        {"conic", {c.conic.A.get_str(), c.conic.B.get_str()}}};
  }
  Json findings = Json::array();
  for (const TableFinding& f : r.disagreements()) findings.push_back(f.to_string());
  j["table_findings"] = findings;
  return j;
}

Json to_json(const TorsionClass& t) {
  Json witnesses = Json::array();
  for (const CurvePoint& p : t.witnesses) witnesses.push_back(to_json(p));
  return {{"shape", to_string(t.shape)},
          {"witnesses", witnesses},
          {"theorem_applies", t.theorem_applies},
          {"notes", t.notes}};
}

Json to_json(const Decision& d) {
  Json j{{"verdict", to_string(d.verdict)}, {"notes", d.notes}};
  if (d.witness) {
    j["witness"] = {{"triangle", to_json(d.witness->triangle)},
                    {"point", to_json(d.witness->point)},
                    {"justification", d.witness->justification}};
    j["source"] = to_string(d.witness->source);
  } else {
    j["witness"] = nullptr;
    j["source"] = nullptr;
    j["budget"] = {{"max_numerator", d.budget.max_numerator},
                   {"max_denominator", d.budget.max_denominator},
                   {"max_param", d.budget.max_param}};
  }
  return j;
}

Json to_json(const Composition& c) {
  return {{"triangle", to_json(c.triangle)},
          {"point", to_json(c.point)},
          {"closed_form", {{"a", to_string(c.closed_a)}, {"b", to_string(c.closed_b)}}},
          {"closed_form_matches", c.closed_form_matches},
          {"radical_check", c.radical_check},
          {"W_irrational", c.w_irrational},
          {"W_sqrt_m_irrational", c.w_sqrt_m_irrational}};
}

}  // namespace thetacong
