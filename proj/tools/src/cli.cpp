// Copyright 2026 The thetacong Authors.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#include "cli.hpp"

#include <CLI11.hpp>
#include <ostream>

#include "fixtures.hpp"
#include "surd.hpp"
#include "thetacong/construct.hpp"
#include "thetacong/decide.hpp"
#include "thetacong/errors.hpp"
#include "thetacong/obstruct.hpp"
#include "thetacong/serialize.hpp"
#include "thetacong/torsion.hpp"

namespace thetacong::cli {

namespace {

constexpr const char* kGrammar = R"(Exact inputs:
  Rationals are written p or p/q. Triangle sides and points use the surd
  grammar: integers, sqrt(M), + - * / and parentheses, e.g.
  "(41-11*sqrt(13))/3". Triangles are "U,V,W". sqrt(M) must lie in Q(sqrt m).
  --cos takes s/r with a negative s for obtuse angles, e.g. -1/2.

Exit codes: 0 success, 2 invalid input, 3 invalid triangle, 4 fixture failure.)";

struct Options {
  std::int64_t n = 1;
  std::int64_t m = 1;
  std::string cos = "1/2";
  SearchBudget budget;
  bool json = false;
  std::string triangle, t1, t2, fixtures;
  int type = 0;
};

Field field_of(std::int64_t m) { return m == 1 ? Field::rationals() : Field::quadratic(m); }

Triangle parse_triangle(const std::string& text, std::int64_t n, const Angle& angle,
                        const Field& field) {
  const auto parts = split_top_level(text);
  if (parts.size() != 3) throw DomainError("a triangle needs three sides \"U,V,W\", got \"" + text + "\"");
  return Triangle::validate(parse_surd(parts[0], field), parse_surd(parts[1], field),
                            parse_surd(parts[2], field), n, angle, field);
}

void add_common(CLI::App* sub, Options& o, bool with_n, bool with_m, bool m_required) {
  if (with_n) sub->add_option("--n", o.n, "Area coefficient n (squarefree)")->required();
  if (with_m) {
    auto* opt = sub->add_option("--m", o.m, "Field Q(sqrt m), m squarefree > 1");
    if (m_required) opt->required();
  }
  sub->add_option("--cos", o.cos, "cos(theta) as s/r")->required();
  sub->add_flag("--json", o.json, "JSON output");
}

void add_budget(CLI::App* sub, Options& o) {
  sub->add_option("--max-num", o.budget.max_numerator, "Point search numerator bound");
  sub->add_option("--max-den", o.budget.max_denominator, "Point search denominator bound");
  sub->add_option("--max-param", o.budget.max_param, "Parameter sweep height bound");
}

void print_notes(std::ostream& out, const std::vector<std::string>& notes) {
  for (const auto& n : notes) out << "note: " << n << "\n";
}

int cmd_decide(const Options& o, std::ostream& out) {
  const Decision d = decide(o.n, o.m, Angle::parse(o.cos), o.budget);
  if (o.json) {
    out << to_json(d).dump(2) << "\n";
    return kOk;
  }
  out << "verdict: " << to_string(d.verdict) << "\n";
  if (d.witness) {
    out << "source: " << to_string(d.witness->source) << "\n"
        << "triangle: " << d.witness->triangle.to_string() << "\n"
        << "point: " << d.witness->point.to_string() << "\n"
        << "justification: " << d.witness->justification << "\n";
  } else {
    out << "budget: max-num " << d.budget.max_numerator << ", max-den " << d.budget.max_denominator
        << ", max-param " << d.budget.max_param << "\n";
  }
  print_notes(out, d.notes);
  return kOk;
}

int cmd_classify(const Options& o, std::ostream& out) {
  const Angle angle = Angle::parse(o.cos);
  const Triangle t = parse_triangle(o.triangle, o.n, angle, field_of(o.m));
  try {
    const TriangleType type = classify(t);
    if (o.json) out << type_report(type).dump() << "\n";
    else if (type == TriangleType::Rational) out << "rational\n";
    else out << "type " << type_tag(type) << "\n";
  } catch (const OutsideClassification& e) {
    if (o.json) out << Json{{"type", nullptr}, {"error", e.what()}}.dump() << "\n";
    else out << "outside classification: " << e.what() << "\n";
  }
  return kOk;
}

int cmd_construct(const Options& o, std::ostream& out) {
  const SearchResult r = search_type(o.type, o.n, Angle::parse(o.cos), o.m, o.budget);
  if (o.json) {
    out << to_json(r).dump(2) << "\n";
    return kOk;
  }
  if (r.triangle) {
    out << "triangle: " << r.triangle->to_string() << "\n"
        << "type: " << type_tag(classify(*r.triangle)) << "\n";
  } else {
    out << "not found\n";
  }
  out << "method: " << r.provenance.method << "\n";
  if (r.provenance.base)
    out << "base: (" << to_string(r.provenance.base->first) << ", "
        << to_string(r.provenance.base->second) << ")\n";
  if (r.provenance.t) out << "t: " << to_string(*r.provenance.t) << "\n";
  if (r.provenance.point) out << "point: " << r.provenance.point->to_string() << "\n";
  print_notes(out, r.notes);
  return kOk;
}

int cmd_compose(const Options& o, std::ostream& out) {
  const Angle angle = Angle::parse(o.cos);
  const Field Q = Field::rationals();
  const Triangle t1 = parse_triangle(o.t1, o.n, angle, Q);
  const Triangle t2 = parse_triangle(o.t2, o.n * o.m, angle, Q);
  const Composition c = compose(t1, t2, o.m);
  if (o.json) {
    out << to_json(c).dump(2) << "\n";
    return kOk;
  }
  out << "triangle: " << c.triangle.to_string() << "\n"
      << "UV: " << (c.triangle.U() * c.triangle.V()).to_string() << "\n"
      << "point: " << c.point.to_string() << "\n"
      << "W in Q: " << (c.w_irrational ? "no" : "yes") << "\n"
      << "W*sqrt(m) in Q: " << (c.w_sqrt_m_irrational ? "no" : "yes") << "\n"
      << "closed form agrees: " << (c.closed_form_matches ? "yes" : "no") << "\n";
  return kOk;
}

int cmd_obstruct(const Options& o, std::ostream& out) {
  const ObstructionReport r = obstruction_report(o.m, Angle::parse(o.cos));
  if (o.json) {
    out << to_json(r).dump(2) << "\n";
    return kOk;
  }
  for (const ConicReport& c : r.types) {
    out << "type " << c.type << ": z^2 = " << c.conic.A.get_str() << " x^2 + " << c.conic.B.get_str()
        << " y^2: ";
    if (c.solvable()) {
      out << "everywhere locally solvable\n";
    } else {
      out << "obstructed at";
      for (const Place& v : c.obstructed) out << " " << v.to_string();
      out << "\n";
    }
  }
  for (const TableFinding& f : r.disagreements()) out << "table finding: " << f.to_string() << "\n";
  return kOk;
}

int cmd_torsion(const Options& o, std::ostream& out) {
  const Angle angle = Angle::parse(o.cos);
  const TorsionClass t = o.m == 1 ? torsion_Q(o.n, angle) : torsion_K(o.n, angle, o.m);
  if (o.json) {
    out << to_json(t).dump(2) << "\n";
    return kOk;
  }
  out << to_string(t.shape) << "\n";
  for (const CurvePoint& p : t.witnesses)
    out << "order " << cyclic_order(t.shape) << ": " << p.to_string() << "\n";
  print_notes(out, t.notes);
  return kOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact (K, theta)-congruent number toolkit", "thetacong"};
  app.footer(kGrammar);
  app.require_subcommand(1);
  Options o;

  auto* decide_cmd = app.add_subcommand("decide", "Search for a triangle certifying n over Q(sqrt m)");
  add_common(decide_cmd, o, true, true, true);
  add_budget(decide_cmd, o);

  auto* classify_cmd = app.add_subcommand("classify", "Validate a triangle and report its type");
  classify_cmd->add_option("--triangle", o.triangle, "Sides \"U,V,W\"")->required();
  add_common(classify_cmd, o, true, true, false);

  auto* construct_cmd = app.add_subcommand("construct", "Search for a triangle of a given type");
  construct_cmd->add_option("--type", o.type, "Triangle type 1-4")->required()->check(CLI::Range(1, 4));
  add_common(construct_cmd, o, true, true, true);
  add_budget(construct_cmd, o);

  auto* compose_cmd = app.add_subcommand("compose", "Combine a rational n-triangle and mn-triangle");
  compose_cmd->add_option("--t1", o.t1, "Rational triangle of area coefficient n")->required();
  compose_cmd->add_option("--t2", o.t2, "Rational triangle of area coefficient mn")->required();
  add_common(compose_cmd, o, true, true, true);

  auto* obstruct_cmd = app.add_subcommand("obstruct", "Local solvability of the Type 2-4 conics");
  add_common(obstruct_cmd, o, false, true, true);

  auto* torsion_cmd = app.add_subcommand("torsion", "Torsion subgroup over Q or Q(sqrt m)");
  add_common(torsion_cmd, o, true, true, false);

  auto* verify_cmd = app.add_subcommand("verify", "Check a fixture file");
  verify_cmd->add_option("--fixtures", o.fixtures, "JSON fixture file")->required();
  verify_cmd->add_flag("--json", o.json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInvalidInput;
  }

  try {
    if (*decide_cmd) return cmd_decide(o, out);
    if (*classify_cmd) return cmd_classify(o, out);
    if (*construct_cmd) return cmd_construct(o, out);
    if (*compose_cmd) return cmd_compose(o, out);
    if (*obstruct_cmd) return cmd_obstruct(o, out);
    if (*torsion_cmd) return cmd_torsion(o, out);
    if (*verify_cmd) return run_fixtures(o.fixtures, o.json, out, err);
  } catch (const InvalidTriangle& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidTriangle;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const DegenerateSum& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const NotInImage& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  }
  return kInvalidInput;
}

}  // namespace thetacong::cli
