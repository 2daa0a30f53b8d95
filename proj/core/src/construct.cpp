// Copyright 2026 The thetacong Authors.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#include "thetacong/construct.hpp"

#include <numeric>

#include "square_filter.hpp"
#include "thetacong/errors.hpp"
#include "thetacong/obstruct.hpp"
#include "thetacong/point_search.hpp"

namespace thetacong {

namespace {

Int big(std::int64_t v) { return Int(static_cast<long>(v)); }

std::int64_t mod_of(const Int& v, std::int64_t mod) {
  Int r = v % Int(static_cast<long>(mod));
  if (r < 0) r += Int(static_cast<long>(mod));
  return r.get_si();
}

void check_inputs(std::int64_t n, std::int64_t m, SearchResult& out) {
  if (n < 1 || !is_squarefree(big(n))) throw DomainError("n must be a positive squarefree integer");
  if (m < 2 || !is_squarefree(big(m))) throw DomainError("m must be a squarefree integer > 1");
  if (std::gcd(n, m) != 1) out.notes.push_back("gcd(m, n) != 1");
}

// Notes the failing places and returns true when the type's conic has no
// local point somewhere.
bool obstructed(int type, std::int64_t m, const Angle& angle, SearchResult& out) {
  const Conic c = conic_for(type, m, angle);
  std::string places;
  for (const Place& v : relevant_places(c))
    if (!locally_solvable(c, v)) places += (places.empty() ? "" : ", ") + v.to_string();
  if (places.empty()) return false;
  out.notes.push_back("type " + std::to_string(type) + " conic has no local point at " + places);
  return true;
}

// Visits t = p/q in order of height max(|p|, q), ties by p then q, until
// visit returns true. Returns whether some visit returned true.
template <typename Visit>
bool sweep_rationals(std::int64_t max_height, bool include_negative, Visit&& visit) {
  for (std::int64_t h = 1; h <= max_height; ++h) {
    for (std::int64_t p = include_negative ? -h : 0; p <= h; ++p) {
      const std::int64_t ap = p < 0 ? -p : p;
      if (ap == h) {
        for (std::int64_t q = 1; q <= h; ++q)
          if (std::gcd(ap, q) == 1 && visit(p, q)) return true;
      } else if (std::gcd(ap, h) == 1 && visit(p, h)) {
        return true;
      }
    }
  }
  return false;
}

}  // namespace

SearchResult search_type1(std::int64_t n, const Angle& angle, std::int64_t m,
                          const SearchBudget& budget) {
  SearchResult out;
  check_inputs(n, m, out);
  budget.validate();
  out.provenance.method = "type1-twist";
  const Field Q = Field::rationals();
  const Field K = Field::quadratic(m);
  const Int mn = big(m) * big(n);
  if (!is_squarefree(mn) || !mn.fits_slong_p()) {
    out.notes.push_back("mn is not squarefree; no curve E_mn to search");
    return out;
  }
  const Curve emn(mn.get_si(), angle, Q);
  auto p = first_point_of_order_gt2(emn, budget);
  if (!p) {
    out.notes.push_back("no point of order > 2 on " + emn.to_string() + " below the budget");
    return out;
  }
  CurvePoint q = dbl(emn, *p);
  if (quad_sign(q.y()) < 0) q = neg(q);
  const Triangle rational = psi(emn, q);
  const QuadElem inv_sqrt_m = QuadElem::sqrt_m(K) / QuadElem(Rat(big(m)));
  Triangle t = rational.scaled(inv_sqrt_m, n, K);
  if (classify(t) != TriangleType::Type1) throw std::logic_error("twist route produced a non-Type-1 triangle");
  out.triangle = t;
  out.provenance.point = *p;
  return out;
}

SearchResult search_type2(std::int64_t n, const Angle& angle, std::int64_t m,
                          const SearchBudget& budget) {
  SearchResult out;
  check_inputs(n, m, out);
  budget.validate();
  out.provenance.method = "type2-sweep";
  if (obstructed(2, m, angle, out)) return out;

  const Field K = Field::quadratic(m);
  const Int r = big(angle.r()), s = big(angle.s()), nn = big(n), mm = big(m);
  const Int two_rn = 2 * r * nn;
  const Int k1 = two_rn * two_rn;  // 4 r^2 n^2
  const Int k2 = 4 * s * nn;
  // X = p^4 + 4r^2n^2 q^4 - 4sn p^2 q^2; accept when m X is a square.
  std::array<std::int64_t, detail::kFilterModuli.size()> k1m{}, k2m{}, mmod{};
  for (std::size_t i = 0; i < detail::kFilterModuli.size(); ++i) {
    k1m[i] = mod_of(k1, detail::kFilterModuli[i]);
    k2m[i] = mod_of(k2, detail::kFilterModuli[i]);
    mmod[i] = mod_of(mm, detail::kFilterModuli[i]);
  }
  const auto& tables = detail::square_tables();

  sweep_rationals(budget.max_param, false, [&](std::int64_t p, std::int64_t q) {
    if (p == 0) return false;
    const Int P = big(p), Q = big(q);
    if (P * P > two_rn * Q * Q) return false;  // U <= V
    for (std::size_t i = 0; i < detail::kFilterModuli.size(); ++i) {
      const std::int64_t M = detail::kFilterModuli[i];
      const std::int64_t p2 = (p % M) * (p % M) % M, q2 = (q % M) * (q % M) % M;
      std::int64_t x = (p2 * p2 + k1m[i] * (q2 * q2 % M) - k2m[i] * (p2 * q2 % M) % M) % M;
      x = detail::mod_pos(x * mmod[i], M);
      if (!tables[i][static_cast<std::size_t>(x)]) return false;
    }
    const Int P2 = P * P, Q2 = Q * Q;
    const Int X = P2 * P2 + k1 * Q2 * Q2 - k2 * P2 * Q2;
    auto root = is_square_int(Int(mm * X));
    if (!root || *root == 0) return false;
    const Rat u = make_rat(P, Q);
    const Rat w = make_rat(*root, mm * P * Q);  // W = w sqrt(m)
    try {
      Triangle t = Triangle::validate(QuadElem(u), QuadElem(Rat(two_rn) / u),
                                      QuadElem(Rat(0), w, K), n, angle, K);
      if (classify(t) != TriangleType::Type2) return false;
      out.triangle = t;
      out.provenance.t = u;
      return true;
    } catch (const InvalidTriangle&) {
      return false;
    }
  });
  if (!out.triangle) out.notes.push_back("no Type 2 triangle with U of height <= max_param");
  return out;
}

std::optional<std::pair<Rat, Rat>> conic_base_point(const Int& c0, std::int64_t m,
                                                    std::int64_t max_height) {
  const Int mm = big(m);
  std::array<std::int64_t, detail::kFilterModuli.size()> c0m{}, mmod{};
  for (std::size_t i = 0; i < detail::kFilterModuli.size(); ++i) {
    c0m[i] = mod_of(c0, detail::kFilterModuli[i]);
    mmod[i] = mod_of(mm, detail::kFilterModuli[i]);
  }
  const auto& tables = detail::square_tables();
  auto attempt = [&](std::int64_t b, std::int64_t c) -> std::optional<std::pair<Rat, Rat>> {
    if (std::gcd(b, c) != 1) return std::nullopt;
    for (std::size_t i = 0; i < detail::kFilterModuli.size(); ++i) {
      const std::int64_t M = detail::kFilterModuli[i];
      const std::int64_t v = (c0m[i] * ((c % M) * (c % M) % M) + mmod[i] * ((b % M) * (b % M) % M)) % M;
      if (!tables[i][static_cast<std::size_t>(v)]) return std::nullopt;
    }
    const Int B = big(b), C = big(c);
    const Int value = c0 * C * C + mm * B * B;
    if (value < 0) return std::nullopt;
    auto a = is_square_int(value);
    if (!a) return std::nullopt;
    return std::make_pair(make_rat(*a, C), make_rat(B, C));
  };
  for (std::int64_t h = 1; h <= max_height; ++h) {
    for (std::int64_t b = 0; b < h; ++b)
      if (auto pt = attempt(b, h)) return pt;
    for (std::int64_t c = 1; c <= h; ++c)
      if (auto pt = attempt(h, c)) return pt;
  }
  return std::nullopt;
}

std::pair<Rat, Rat> conic_parametrize(const std::pair<Rat, Rat>& base, std::int64_t m,
                                      const Rat& t) {
  const Rat mm(big(m));
  const Rat& u0 = base.first;
  const Rat& v0 = base.second;
  const Rat den = t * t - mm;
  Rat u = (-u0 * t * t + 2 * mm * v0 * t - mm * u0) / den;
  Rat v = (v0 * t * t - 2 * u0 * t + mm * v0) / den;
  return {u, v};
}

std::optional<Triangle> triangle_from_conic_point(int type, const Rat& u, const Rat& v,
                                                  std::int64_t n, const Angle& angle,
                                                  std::int64_t m) {
  if (type != 3 && type != 4) throw DomainError("conic points give Type 3 or Type 4 triangles");
  const Field K = Field::quadratic(m);
  const Rat au = u < 0 ? Rat(-u) : u, av = v < 0 ? Rat(-v) : v;
  const Rat w2 = 2 * au * au + 2 * Rat(big(m)) * av * av - 4 * Rat(big(angle.s()) * big(n));
  auto w = is_square_rat(w2);
  if (!w || *w == 0) return std::nullopt;
  const QuadElem vs(Rat(0), av, K);
  const QuadElem U = type == 3 ? QuadElem(au) - vs : vs - QuadElem(au);
  const QuadElem V = QuadElem(au) + vs;
  try {
    Triangle t = Triangle::validate(U, V, QuadElem(*w), n, angle, K);
    const TriangleType want = type == 3 ? TriangleType::Type3 : TriangleType::Type4;
    if (classify(t) != want) return std::nullopt;
    return t;
  } catch (const InvalidTriangle&) {
    return std::nullopt;
  } catch (const OutsideClassification&) {
    return std::nullopt;
  }
}

namespace {

SearchResult search_conic_type(int type, std::int64_t n, const Angle& angle, std::int64_t m,
                               const SearchBudget& budget) {
  SearchResult out;
  check_inputs(n, m, out);
  budget.validate();
  out.provenance.method = type == 3 ? "type3-parametrization" : "type4-parametrization";
  if (obstructed(type, m, angle, out)) return out;

  const Int N = 2 * big(angle.r()) * big(n);
  const Int c0 = type == 3 ? N : Int(-N);
  auto base = conic_base_point(c0, m, budget.max_param);
  if (!base) {
    out.notes.push_back("no local point found below bound");
    return out;
  }
  out.provenance.base = *base;
  if (auto t = triangle_from_conic_point(type, base->first, base->second, n, angle, m)) {
    out.triangle = t;
    return out;
  }

  // u = Nu / D, v = Nv / D with t = p/q and base (a/c, b/c):
  //   Nu = -a p^2 + 2m b p q - m a q^2, Nv = b p^2 - 2a p q + m b q^2,
  //   D = c (p^2 - m q^2). W^2 D^2 = 2 Nu^2 + 2m Nv^2 - 4sn D^2.
  const Int c = lcm(base->first.get_den(), base->second.get_den());
  const Int aa = base->first.get_num() * (c / base->first.get_den());
  const Int b = base->second.get_num() * (c / base->second.get_den());
  const Int mm = big(m), sn4 = 4 * big(angle.s()) * big(n);
  constexpr std::size_t kM = detail::kFilterModuli.size();
  std::array<std::int64_t, kM> am{}, bm{}, cm{}, mmod{}, snm{};
  for (std::size_t i = 0; i < kM; ++i) {
    const std::int64_t M = detail::kFilterModuli[i];
    am[i] = mod_of(aa, M);
    bm[i] = mod_of(b, M);
    cm[i] = mod_of(c, M);
    mmod[i] = mod_of(mm, M);
    snm[i] = mod_of(sn4, M);
  }
  const auto& tables = detail::square_tables();
  sweep_rationals(budget.max_param, true, [&](std::int64_t p, std::int64_t q) {
    for (std::size_t i = 0; i < kM; ++i) {
      const std::int64_t M = detail::kFilterModuli[i];
      const std::int64_t pm = detail::mod_pos(p, M), qm = q % M;
      const std::int64_t p2 = pm * pm % M, q2 = qm * qm % M, pq = pm * qm % M;
      const std::int64_t nu = detail::mod_pos(
          -am[i] * p2 % M + 2 * mmod[i] % M * bm[i] % M * pq % M - mmod[i] * am[i] % M * q2 % M, M);
      const std::int64_t nv = detail::mod_pos(
          bm[i] * p2 % M - 2 * am[i] * pq % M + mmod[i] * bm[i] % M * q2 % M, M);
      const std::int64_t d = cm[i] * detail::mod_pos(p2 - mmod[i] * q2 % M, M) % M;
      const std::int64_t x = detail::mod_pos(
          2 * nu * nu % M + 2 * mmod[i] * (nv * nv % M) % M - snm[i] * (d * d % M) % M, M);
      if (!tables[i][static_cast<std::size_t>(x)]) return false;
    }
    const Int P = big(p), Q = big(q);
    const Int Nu = -aa * P * P + 2 * mm * b * P * Q - mm * aa * Q * Q;
    const Int Nv = b * P * P - 2 * aa * P * Q + mm * b * Q * Q;
    const Int D = c * (P * P - mm * Q * Q);
    if (!is_square_int(Int(2 * Nu * Nu + 2 * mm * Nv * Nv - sn4 * D * D))) return false;
    const Rat t = make_rat(P, Q);
    const auto [u, v] = conic_parametrize(*base, m, t);
    if (u * u - Rat(mm) * v * v != Rat(c0)) throw std::logic_error("conic parametrization left the conic");
    if (auto tri = triangle_from_conic_point(type, u, v, n, angle, m)) {
      out.triangle = tri;
      out.provenance.t = t;
      return true;
    }
    return false;
  });
  if (!out.triangle) out.notes.push_back("no parameter t of height <= max_param gives a rational W");
  return out;
}

}  // namespace

SearchResult search_type3(std::int64_t n, const Angle& angle, std::int64_t m,
                          const SearchBudget& budget) {
  return search_conic_type(3, n, angle, m, budget);
}

SearchResult search_type4(std::int64_t n, const Angle& angle, std::int64_t m,
                          const SearchBudget& budget) {
  return search_conic_type(4, n, angle, m, budget);
}

SearchResult search_type(int type, std::int64_t n, const Angle& angle, std::int64_t m,
                         const SearchBudget& budget) {
  switch (type) {
    case 1: return search_type1(n, angle, m, budget);
    case 2: return search_type2(n, angle, m, budget);
    case 3: return search_type3(n, angle, m, budget);
    case 4: return search_type4(n, angle, m, budget);
    default: throw DomainError("triangle type must be 1, 2, 3 or 4");
  }
}

Composition compose(const Triangle& t1, const Triangle& t2, std::int64_t m) {
  if (m < 2 || !is_squarefree(big(m))) throw DomainError("compose needs a squarefree m > 1");
  if (!t1.field().is_rational() || !t2.field().is_rational())
    throw DomainError("compose takes two rational triangles");
  for (const Triangle* t : {&t1, &t2})
    if (!t->U().is_rational() || !t->V().is_rational() || !t->W().is_rational())
      throw DomainError("compose takes two rational triangles");
  if (!(t1.angle() == t2.angle())) throw DomainError("compose needs triangles with the same angle");
  const std::int64_t n = t1.n();
  if (big(t2.n()) != big(m) * big(n))
    throw DomainError("second triangle must have area coefficient m*n = " +
                      Int(big(m) * big(n)).get_str());

  const Rat U1 = t1.U().a(), V1 = t1.V().a(), W1 = t1.W().a();
  const Rat U2 = t2.U().a(), V2 = t2.V().a(), W2 = t2.W().a();
  const Rat mm(big(m));
  const Rat gap = W2 * W2 - mm * W1 * W1;
  if (gap == 0) throw DegenerateSum("W2^2 = m W1^2: the two points share an x-coordinate");

  const Field K = Field::quadratic(m);
  const Curve curve(n, t1.angle(), K);
  const Triangle t2k = t2.scaled(QuadElem::sqrt_m(K) / QuadElem(mm), n, K);
  const Triangle t1k = t1.scaled(QuadElem(1), n, K);
  CurvePoint p = add(curve, phi(t1k), phi(t2k));
  if (p.is_infinity()) throw std::logic_error("composition sum is the point at infinity");
  if (quad_sign(p.y()) < 0) p = neg(p);

  Triangle t = [&] {
    try {
      return psi(curve, p);
    } catch (const NotInImage& e) {
      throw std::logic_error(std::string("composition sum is not in the image of phi: ") + e.what());
    }
  }();

  const Rat D1 = V1 * V1 - U1 * U1, D2 = V2 * V2 - U2 * U2;
  const Rat s2n = 2 * Rat(big(t1.angle().s()) * big(n));
  const Rat closed_a = (mm * mm * mm * W1 * W1 * D1 * D1 + W2 * W2 * D2 * D2) / (4 * mm * gap * gap) -
                       (W1 * W1 / 4 + W2 * W2 / (4 * mm) + s2n);
  const Rat closed_b = -W1 * W2 * D1 * D2 / (2 * gap * gap);

  Composition out{t, p, closed_a, closed_b};
  out.closed_form_matches = p.x().a() == closed_a && p.x().b() == closed_b;
  // sqrt(u) = alpha + beta sqrt(m) with 2 alpha beta = b, so W = 2 alpha + 2 beta sqrt(m).
  const Rat alpha = t.W().a() / 2, beta = t.W().b() / 2;
  out.radical_check = alpha != 0 && beta == closed_b / (2 * alpha) &&
                      alpha * alpha + mm * beta * beta == closed_a;
  out.w_irrational = !t.W().is_rational();
  out.w_sqrt_m_irrational = !t.W().is_pure_surd();
  return out;
}

}  // namespace thetacong
