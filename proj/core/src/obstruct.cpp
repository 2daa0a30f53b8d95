// Copyright 2026 The thetacong Authors.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#include "thetacong/obstruct.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <utility>

#include "thetacong/errors.hpp"

namespace thetacong {

namespace {

Int big(std::int64_t v) { return Int(static_cast<long>(v)); }

void check_m(std::int64_t m) {
  if (m < 2 || !is_squarefree(big(m))) throw DomainError("m must be a squarefree integer > 1");
}

// Residue of x modulo k in [0, k).
long residue(const Int& x, long k) {
  Int r = x % k;
  if (r < 0) r += k;
  return r.get_si();
}

bool listed(long a, long b, std::initializer_list<std::pair<long, long>> cases) {
  return std::any_of(cases.begin(), cases.end(),
                     [&](const auto& c) { return c.first == a && c.second == b; });
}

}  // namespace

Conic conic_for(int type, std::int64_t m, const Angle& angle) {
  check_m(m);
  const Int r = big(angle.r()), s = big(angle.s()), mm = big(m);
  switch (type) {
    case 2: return Conic{mm, mm * (r * r - s * s)};
    case 3: return Conic{2 * r * (r - s), 2 * mm * r * (r + s)};
    case 4: return Conic{2 * r * (r + s), 2 * mm * r * (r - s)};
    default: throw DomainError("conic type must be 2, 3 or 4");
  }
}

std::array<Conic, 3> conics_for(std::int64_t m, const Angle& angle) {
  return {conic_for(2, m, angle), conic_for(3, m, angle), conic_for(4, m, angle)};
}

Conic square_class(const Conic& c) {
  auto reduce = [](const Int& v) {
    if (v == 0) throw DomainError("conic coefficients must be nonzero");
    return v > 0 ? sqf(v) : Int(-sqf(-v));
  };
  return Conic{reduce(c.A), reduce(c.B)};
}

bool locally_solvable(const Conic& c, const Place& place) {
  return hilbert(c.A, c.B, place) == 1;
}

std::vector<Place> relevant_places(const Conic& c) {
  std::set<Int> primes{2};
  for (const Int& p : prime_divisors(c.A)) primes.insert(p);
  for (const Int& p : prime_divisors(c.B)) primes.insert(p);
  std::vector<Place> out{Place::infinity()};
  for (const Int& p : primes) out.push_back(Place::prime(p));
  return out;
}

std::optional<bool> table_says_obstructed(const Int& x, const Int& y, const Int& p) {
  const int alpha = x % p == 0 ? 1 : 0;
  const int beta = y % p == 0 ? 1 : 0;
  const Int a = alpha ? Int(x / p) : x;
  const Int b = beta ? Int(y / p) : y;
  if (p == 2) {
    if (alpha == 0 && beta == 0) return residue(a, 4) == 3 && residue(b, 4) == 3;
    const long a8 = residue(a, 8), b8 = residue(b, 8);
    if (alpha == 0 && beta == 1) return listed(a8, b8, {{3, 1}, {3, 5}, {7, 5}, {7, 7}});
    if (alpha == 1 && beta == 0)
      return listed(a8, b8, {{1, 3}, {1, 5}, {3, 5}, {3, 7}, {5, 3}, {5, 7}, {7, 3}, {7, 7}});
    return listed(a8, b8, {{1, 3}, {1, 5}, {3, 1}, {3, 3}, {5, 1}, {5, 7}, {7, 5}, {7, 7}});
  }
  if (alpha == 0 && beta == 0) return std::nullopt;
  const bool one_mod_4 = residue(p, 4) == 1;
  if (alpha == 0 && beta == 1) return legendre(a, p) == -1;
  if (alpha == 1 && beta == 0) return legendre(b, p) == -1;
  const int prod = legendre(a, p) * legendre(b, p);
  return one_mod_4 ? prod == -1 : prod == 1;
}

std::string TableFinding::to_string() const {
  std::ostringstream os;
  os << "type " << type << " at p=" << p.get_str() << ", (alpha,beta)=(" << alpha << ","
     << beta << "), (a,b)=(" << a.get_str() << "," << b.get_str() << "): table says "
     << (table_obstructed ? (*table_obstructed ? "obstructed" : "solvable") : "n/a")
     << ", pair symbol says " << (pair_obstructed ? "obstructed" : "solvable")
     << ", conic symbol says " << (conic_obstructed ? "obstructed" : "solvable");
  return os.str();
}

const ConicReport& ObstructionReport::for_type(int type) const {
  if (type < 2 || type > 4) throw DomainError("conic type must be 2, 3 or 4");
  return types[static_cast<std::size_t>(type - 2)];
}

std::vector<TableFinding> ObstructionReport::disagreements() const {
  std::vector<TableFinding> out;
  for (const auto& f : table_checks)
    if (f.disagrees()) out.push_back(f);
  return out;
}

ObstructionReport obstruction_report(std::int64_t m, const Angle& angle) {
  const auto conics = conics_for(m, angle);
  ObstructionReport report;
  report.m = m;
  report.angle = angle;
  const Int mm = big(m);
  const std::array<Int, 3> partners{angle.sqf_alpha_sq(), angle.sqf_2r_r_minus_s(),
                                    angle.sqf_2r_r_plus_s()};
  for (int i = 0; i < 3; ++i) {
    ConicReport& cr = report.types[static_cast<std::size_t>(i)];
    cr.type = i + 2;
    cr.conic = conics[static_cast<std::size_t>(i)];
    cr.checked = relevant_places(cr.conic);
    for (const Place& v : cr.checked)
      if (!locally_solvable(cr.conic, v)) cr.obstructed.push_back(v);

    const Int& partner = partners[static_cast<std::size_t>(i)];
    std::set<Int> primes{2};
    for (const Int& p : prime_divisors(mm * partner)) primes.insert(p);
    for (const Int& p : primes) {
      TableFinding f;
      f.type = i + 2;
      f.p = p;
      f.alpha = mm % p == 0 ? 1 : 0;
      f.beta = partner % p == 0 ? 1 : 0;
      f.a = f.alpha ? Int(mm / p) : mm;
      f.b = f.beta ? Int(partner / p) : partner;
      f.table_obstructed = table_says_obstructed(mm, partner, p);
      f.pair_obstructed = hilbert(mm, partner, Place::prime(p)) == -1;
      f.conic_obstructed = !locally_solvable(cr.conic, Place::prime(p));
      report.table_checks.push_back(f);
    }
  }
  return report;
}

}  // namespace thetacong
