// Copyright 2026 The thetacong Authors.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#include "fixtures.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include "cli.hpp"
#include "surd.hpp"
#include "thetacong/construct.hpp"
#include "thetacong/decide.hpp"
#include "thetacong/errors.hpp"
#include "thetacong/obstruct.hpp"
#include "thetacong/serialize.hpp"
#include "thetacong/torsion.hpp"

namespace thetacong::cli {

namespace {

// Malformed fixture entry, as opposed to a failed check.
struct FixtureError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string str(const Json& obj, const std::string& key) {
  if (!obj.contains(key)) throw FixtureError("missing key \"" + key + "\"");
  if (!obj.at(key).is_string()) throw FixtureError("\"" + key + "\" must be an exact string");
  return obj.at(key).get<std::string>();
}

std::int64_t integer(const Json& obj, const std::string& key) {
  const std::string s = str(obj, key);
  try {
    std::size_t used = 0;
    const long long v = std::stoll(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::logic_error&) {
    throw FixtureError("\"" + key + "\" is not an integer: " + s);
  }
}

bool boolean(const Json& obj, const std::string& key) {
  if (!obj.contains(key) || !obj.at(key).is_boolean())
    throw FixtureError("\"" + key + "\" must be a boolean");
  return obj.at(key).get<bool>();
}

struct Context {
  std::int64_t n = 1;
  std::int64_t m = 1;
  Angle angle{2, 1};
  Field field = Field::rationals();
};

Context context(const Json& in, bool with_n = true) {
  Context c;
  if (with_n) c.n = integer(in, "n");
  c.m = in.contains("m") ? integer(in, "m") : 1;
  c.angle = Angle::parse(str(in, "cos"));
  c.field = c.m == 1 ? Field::rationals() : Field::quadratic(c.m);
  return c;
}

std::vector<QuadElem> elems(const std::string& text, const Field& f, std::size_t count) {
  const auto parts = split_top_level(text);
  if (parts.size() != count)
    throw FixtureError("expected " + std::to_string(count) + " comma-separated values in \"" + text + "\"");
  std::vector<QuadElem> out;
  for (const auto& p : parts) out.push_back(parse_surd(p, f));
  return out;
}

Triangle triangle(const std::string& text, std::int64_t n, const Context& c) {
  const auto s = elems(text, c.field, 3);
  return Triangle::validate(s[0], s[1], s[2], n, c.angle, c.field);
}

CurvePoint point(const std::string& text, const Field& f) {
  const auto s = elems(text, f, 2);
  return CurvePoint(s[0], s[1]);
}

SearchBudget budget(const Json& in) {
  SearchBudget b;
  if (!in.contains("budget")) return b;
  const Json& j = in.at("budget");
  if (j.contains("max_numerator")) b.max_numerator = integer(j, "max_numerator");
  if (j.contains("max_denominator")) b.max_denominator = integer(j, "max_denominator");
  if (j.contains("max_param")) b.max_param = integer(j, "max_param");
  return b;
}

using Failures = std::vector<std::string>;

void expect(Failures& f, bool ok, const std::string& what) {
  if (!ok) f.push_back(what);
}

std::string show(const QuadElem& x) { return x.to_string(); }

Failures check_validate(const Json& in, const Json& ex) {
  const Context c = context(in);
  Failures f;
  const bool want = boolean(ex, "valid");
  try {
    triangle(str(in, "triangle"), c.n, c);
    expect(f, want, "triangle validated but was expected to fail");
  } catch (const InvalidTriangle& e) {
    expect(f, !want, std::string("unexpected rejection: ") + e.what());
    if (!want && ex.contains("identity"))
      expect(f, e.identity() == str(ex, "identity"), "failed identity was " + e.identity());
  }
  return f;
}

Failures check_phi(const Json& in, const Json& ex) {
  const Context c = context(in);
  const Triangle t = triangle(str(in, "triangle"), c.n, c);
  const CurvePoint got = phi(t);
  const CurvePoint want = point(str(ex, "point"), c.field);
  Failures f;
  expect(f, got == want, "phi gave " + got.to_string() + ", expected " + want.to_string());
  expect(f, is_in_2E(Curve(c.n, c.angle, c.field), got), "phi image not in 2E");
  expect(f, psi(Curve(c.n, c.angle, c.field), got) == t, "psi does not invert phi");
  return f;
}

Failures check_psi(const Json& in, const Json& ex) {
  const Context c = context(in);
  const Curve curve(c.n, c.angle, c.field);
  const CurvePoint p = point(str(in, "point"), c.field);
  const Triangle got = psi(curve, p);
  const Triangle want = triangle(str(ex, "triangle"), c.n, c);
  Failures f;
  expect(f, got == want, "psi gave " + got.to_string() + ", expected " + want.to_string());
  expect(f, phi(got) == p, "phi does not invert psi");
  return f;
}

Failures check_classify(const Json& in, const Json& ex) {
  const Context c = context(in);
  const TriangleType got = classify(triangle(str(in, "triangle"), c.n, c));
  Failures f;
  expect(f, type_tag(got) == str(ex, "type"), "classified as " + type_tag(got));
  return f;
}

Failures check_conic_point(const Json& in, const Json& ex) {
  const Context c = context(in);
  const ConicPoint got = to_conic_point(triangle(str(in, "triangle"), c.n, c));
  const auto want = elems(str(ex, "point"), Field::rationals(), 3);
  const auto conic = elems(str(ex, "conic"), Field::rationals(), 2);
  Failures f;
  expect(f, got.x == want[0].a() && got.y == want[1].a() && got.z == want[2].a(),
         "conic point (" + to_string(got.x) + ", " + to_string(got.y) + ", " + to_string(got.z) + ")");
  expect(f, Rat(got.conic.A) == conic[0].a() && Rat(got.conic.B) == conic[1].a(),
         "conic (" + got.conic.A.get_str() + ", " + got.conic.B.get_str() + ")");
  return f;
}

Failures check_double(const Json& in, const Json& ex) {
  const Context c = context(in);
  const Curve curve(c.n, c.angle, c.field);
  const CurvePoint p = point(str(in, "point"), c.field);
  Failures f;
  if (!is_on_curve(curve, p)) return {"input point is not on " + curve.to_string()};
  const CurvePoint d = dbl(curve, p);
  const QuadElem want_x = parse_surd(str(ex, "x"), c.field);
  expect(f, !d.is_infinity() && d.x() == want_x,
         "2P = " + d.to_string() + ", expected x = " + show(want_x));
  expect(f, is_in_2E(curve, d), "2P not in 2E");
  if (ex.contains("roots") && !d.is_infinity()) {
    const auto roots = elems(str(ex, "roots"), c.field, 3);
    const Int r = c.angle.r(), s = c.angle.s(), n = c.n;
    const std::array<QuadElem, 3> vals{d.x(), d.x() + QuadElem(Rat(Int((r + s) * n))),
                                       d.x() - QuadElem(Rat(Int((r - s) * n)))};
    for (std::size_t i = 0; i < 3; ++i) {
      auto got = is_square_quad(vals[i]);
      expect(f, got && *got == roots[i], "square root of " + show(vals[i]) + " is not " + show(roots[i]));
    }
  }
  return f;
}

Failures check_torsion(const Json& in, const Json& ex) {
  const Context c = context(in);
  const TorsionClass t = c.m == 1 ? torsion_Q(c.n, c.angle) : torsion_K(c.n, c.angle, c.m);
  Failures f;
  expect(f, to_string(t.shape) == str(ex, "shape"), "shape " + to_string(t.shape));
  if (ex.contains("witnesses")) {
    for (const auto& w : ex.at("witnesses")) {
      if (!w.is_string()) throw FixtureError("witnesses must be strings");
      const CurvePoint p = point(w.get<std::string>(), c.field);
      expect(f, std::find(t.witnesses.begin(), t.witnesses.end(), p) != t.witnesses.end(),
             "missing witness " + p.to_string());
    }
  }
  return f;
}

Failures check_search(const Json& in, const Json& ex) {
  const Context c = context(in);
  const int type = static_cast<int>(integer(in, "type"));
  const SearchResult r = search_type(type, c.n, c.angle, c.m, budget(in));
  Failures f;
  const bool want_found = boolean(ex, "found");
  expect(f, r.triangle.has_value() == want_found, r.triangle ? "found a triangle" : "found nothing");
  if (r.triangle) {
    const TriangleType got = classify(*r.triangle);
    expect(f, type_tag(got) == std::to_string(type), "result has type " + type_tag(got));
    if (ex.contains("triangle")) {
      const Triangle want = triangle(str(ex, "triangle"), c.n, c);
      expect(f, *r.triangle == want, "found " + r.triangle->to_string());
    }
  }
  return f;
}

Failures check_compose(const Json& in, const Json& ex) {
  const Context c = context(in);
  const Context q{c.n, 1, c.angle, Field::rationals()};
  const Triangle t1 = triangle(str(in, "t1"), c.n, q);
  const Triangle t2 = triangle(str(in, "t2"), c.n * c.m, q);
  const Composition r = compose(t1, t2, c.m);
  Failures f;
  const QuadElem uv = r.triangle.U() * r.triangle.V();
  expect(f, uv == parse_surd(str(ex, "UV"), c.field), "UV = " + show(uv));
  expect(f, r.w_irrational == boolean(ex, "W_irrational"), "W rationality");
  expect(f, r.w_sqrt_m_irrational == boolean(ex, "W_sqrt_m_irrational"), "W sqrt(m) rationality");
  if (ex.contains("closed_form_matches"))
    expect(f, r.closed_form_matches == boolean(ex, "closed_form_matches"), "closed form comparison");
  if (ex.contains("triangle")) {
    const Triangle want = triangle(str(ex, "triangle"), c.n, c);
    expect(f, r.triangle == want, "composed " + r.triangle.to_string());
  }
  return f;
}

Failures check_obstruct(const Json& in, const Json& ex) {
  const Context c = context(in, false);
  const ObstructionReport r = obstruction_report(c.m, c.angle);
  Failures f;
  for (int type = 2; type <= 4; ++type) {
    const std::string key = "type" + std::to_string(type);
    if (!ex.contains(key)) continue;
    expect(f, r.for_type(type).solvable() == boolean(ex, key), key + " solvability");
  }
  return f;
}

Failures check_decide(const Json& in, const Json& ex) {
  const Context c = context(in);
  const Decision d = decide(c.n, c.m, c.angle, budget(in));
  Failures f;
  expect(f, to_string(d.verdict) == str(ex, "verdict"), "verdict " + to_string(d.verdict));
  if (ex.contains("source"))
    expect(f, d.witness && to_string(d.witness->source) == str(ex, "source"),
           "source " + (d.witness ? to_string(d.witness->source) : std::string("none")));
  if (ex.contains("triangle"))
    expect(f, d.witness && d.witness->triangle == triangle(str(ex, "triangle"), c.n, c),
           "triangle " + (d.witness ? d.witness->triangle.to_string() : std::string("none")));
  if (ex.contains("note")) {
    const std::string want = str(ex, "note");
    bool seen = false;
    for (const auto& note : d.notes) seen = seen || note.find(want) != std::string::npos;
    expect(f, seen, "no note containing \"" + want + "\"");
  }
  return f;
}

const std::map<std::string, std::function<Failures(const Json&, const Json&)>>& checks() {
  static const std::map<std::string, std::function<Failures(const Json&, const Json&)>> table{
      {"validate", check_validate}, {"phi", check_phi},         {"psi", check_psi},
      {"classify", check_classify}, {"conic_point", check_conic_point},
      {"double", check_double},     {"torsion", check_torsion}, {"search", check_search},
      {"compose", check_compose},   {"obstruct", check_obstruct}, {"decide", check_decide}};
  return table;
}

}  // namespace

int run_fixtures(const std::string& path, bool json, std::ostream& out, std::ostream& err) {
  std::ifstream file(path);
  if (!file) {
    err << "error: cannot open fixture file " << path << "\n";
    return kFixtureFailure;
  }
  std::stringstream buffer;
  buffer << file.rdbuf();
  const std::string text = buffer.str();
  if (text.find_first_not_of(" \t\r\n") == std::string::npos) {
    err << "warning: fixture file " << path << " is empty\n";
    if (json) out << Json{{"passed", 0}, {"failed", 0}, {"results", Json::array()}}.dump(2) << "\n";
    else out << "0 fixtures\n";
    return kOk;
  }
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    err << "error: " << path << " is not valid JSON: " << e.what() << "\n";
    return kFixtureFailure;
  }
  if (!doc.is_array()) {
    err << "error: " << path << " must hold a JSON array\n";
    return kFixtureFailure;
  }
  if (doc.empty()) err << "warning: fixture file " << path << " has no entries\n";

  int passed = 0, failed = 0;
  Json results = Json::array();
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const Json& entry = doc[i];
    std::string kind = "?", name = "#" + std::to_string(i);
    Failures failures;
    std::string note;
    try {
      if (!entry.is_object()) throw FixtureError("entry is not an object");
      kind = str(entry, "kind");
      if (entry.contains("name")) name = str(entry, "name");
      if (entry.contains("paperNote")) note = str(entry, "paperNote");
      const auto it = checks().find(kind);
      if (it == checks().end()) throw FixtureError("unknown kind \"" + kind + "\"");
      if (!entry.contains("inputs") || !entry.at("inputs").is_object())
        throw FixtureError("missing object \"inputs\"");
      if (!entry.contains("expected") || !entry.at("expected").is_object())
        throw FixtureError("missing object \"expected\"");
      failures = it->second(entry.at("inputs"), entry.at("expected"));
    } catch (const FixtureError& e) {
      failures = {std::string("malformed fixture: ") + e.what()};
    } catch (const std::exception& e) {
      failures = {std::string("error: ") + e.what()};
    }
    const bool ok = failures.empty();
    (ok ? passed : failed)++;
    if (json) {
      results.push_back({{"name", name}, {"kind", kind}, {"pass", ok}, {"failures", failures},
                         {"paperNote", note}});
    } else {
      out << (ok ? "PASS " : "FAIL ") << kind << " " << name << "\n";
      for (const auto& msg : failures) out << "     " << msg << "\n";
      if (!note.empty()) out << "     note: " << note << "\n";
    }
  }
  if (json) out << Json{{"passed", passed}, {"failed", failed}, {"results", results}}.dump(2) << "\n";
  else out << passed << " passed, " << failed << " failed\n";
  return failed == 0 ? kOk : kFixtureFailure;
}

}  // namespace thetacong::cli
