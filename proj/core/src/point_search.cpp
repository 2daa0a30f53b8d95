// Copyright 2026 The thetacong Authors.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#include "thetacong/point_search.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <limits>
#include <numeric>

#include "square_filter.hpp"

namespace thetacong {

namespace {

__extension__ typedef __int128 i128;
__extension__ typedef unsigned __int128 u128;

struct Hit {
  Int height;
  Rat x;
  Rat y;
};

bool hit_less(const Hit& a, const Hit& b) {
  if (a.height != b.height) return a.height < b.height;
  if (a.x != b.x) return a.x < b.x;
  return a.y < b.y;
}

// y^2 e^6 = p (p + A e^2)(p - B e^2) for x = p/e^2 with A = (r+s)n, B = (r-s)n.
class Scanner {
 public:
  Scanner(const Curve& curve, const SearchBudget& budget) : budget_(budget) {
    const std::int64_t n = curve.n(), r = curve.angle().r(), s = curve.angle().s();
    plus_ = (r + s) * n;
    minus_ = (r - s) * n;
    divisors_ = {1};
    for (const Int& q : prime_divisors(Int(static_cast<long>(plus_)) * Int(static_cast<long>(minus_)))) {
      const std::size_t count = divisors_.size();
      for (std::size_t i = 0; i < count; ++i) {
        const Int d = Int(static_cast<long>(divisors_[i])) * q;
        if (d <= Int(static_cast<long>(budget_.max_numerator))) divisors_.push_back(d.get_si());
      }
    }
  }

  // Visits all (p, e) with height max(|p|, e^2) in [lo, hi), appending hits.
  // With gcd(p, e) = 1 every prime of odd order in p divides A*B, so
  // p = +-d u^2 for a squarefree divisor d of A*B.
  void scan_band(std::int64_t lo, std::int64_t hi, std::vector<Hit>& hits) const {
    const std::int64_t pmax = std::min(hi - 1, budget_.max_numerator);
    for (std::int64_t e = 1; e <= budget_.max_denominator; ++e) {
      const std::int64_t e2 = e * e;
      if (e2 >= hi) break;
      const bool all = e2 >= lo;
      const Residues res = residues_for(e2);
      if (all) test(0, e, e2, res, hits);
      for (std::int64_t d : divisors_) {
        for (std::int64_t u = 1;; ++u) {
          const i128 mag = static_cast<i128>(d) * u * u;
          if (mag > pmax) break;
          if (!all && mag < lo) continue;
          const auto v = static_cast<std::int64_t>(mag);
          if (v <= static_cast<i128>(plus_) * e2) test(-v, e, e2, res, hits);
          if (v >= static_cast<i128>(minus_) * e2) test(v, e, e2, res, hits);
        }
      }
    }
  }

  std::int64_t max_height() const {
    const std::int64_t d = budget_.max_denominator;
    const std::int64_t d2 = d > 3'000'000'000LL ? std::numeric_limits<std::int64_t>::max() : d * d;
    return std::max(budget_.max_numerator, d2);
  }

 private:
  // Filter tables over combined moduli: whether p (p + A e^2)(p - B e^2)
  // can be a square given p modulo 64*63, 65*11 and 17*19*23.
  static constexpr std::array<std::int64_t, 3> kCombined{64 * 63, 65 * 11, 17 * 19 * 23};
  using Residues = std::array<std::vector<std::uint8_t>, kCombined.size()>;

  Residues residues_for(std::int64_t e2) const {
    const auto& squares = detail::square_tables();
    std::array<std::vector<bool>, detail::kFilterModuli.size()> single;
    for (std::size_t i = 0; i < detail::kFilterModuli.size(); ++i) {
      const std::int64_t mod = detail::kFilterModuli[i];
      const std::int64_t a = static_cast<std::int64_t>((static_cast<i128>(plus_) * e2) % mod);
      const std::int64_t b = static_cast<std::int64_t>((static_cast<i128>(minus_) * e2) % mod);
      single[i].resize(static_cast<std::size_t>(mod));
      for (std::int64_t r = 0; r < mod; ++r) {
        const std::int64_t v = detail::mod_pos(r * detail::mod_pos(r + a, mod) % mod *
                                                   detail::mod_pos(r - b, mod),
                                               mod);
        single[i][static_cast<std::size_t>(r)] = squares[i][static_cast<std::size_t>(v)];
      }
    }
    // kFilterModuli = {64, 63, 65, 11, 17, 19, 23}.
    static constexpr std::array<std::array<int, 3>, 3> groups{{{0, 1, -1}, {2, 3, -1}, {4, 5, 6}}};
    Residues res;
    for (std::size_t g = 0; g < kCombined.size(); ++g) {
      res[g].resize(static_cast<std::size_t>(kCombined[g]));
      for (std::int64_t r = 0; r < kCombined[g]; ++r) {
        bool ok = true;
        for (int i : groups[g])
          if (i >= 0)
            ok = ok && single[static_cast<std::size_t>(i)]
                            [static_cast<std::size_t>(r % detail::kFilterModuli[static_cast<std::size_t>(i)])];
        res[g][static_cast<std::size_t>(r)] = ok;
      }
    }
    return res;
  }

  void test(std::int64_t p, std::int64_t e, std::int64_t e2, const Residues& res,
            std::vector<Hit>& hits) const {
    for (std::size_t g = 0; g < kCombined.size(); ++g)
      if (!res[g][static_cast<std::size_t>(detail::mod_pos(p, kCombined[g]))]) return;
    if (std::gcd(p, e) != 1) return;
    const i128 f2 = static_cast<i128>(p) + static_cast<i128>(plus_) * e2;
    const i128 f3 = static_cast<i128>(p) - static_cast<i128>(minus_) * e2;
    Int y_num = 0;
    if (p != 0 && f2 != 0 && f3 != 0) {
      Int prod = Int(static_cast<long>(p)) * to_int(f2) * to_int(f3);
      auto root = is_square_int(prod);
      if (!root) return;
      y_num = *root;
    }
    const Int ee(static_cast<long>(e));
    Rat x = make_rat(Int(static_cast<long>(p)), ee * ee);
    Rat y = make_rat(y_num, ee * ee * ee);
    Int h = height(x);
    hits.push_back({h, x, y});
    if (y != 0) hits.push_back({h, x, Rat(-y)});
  }

  static Int to_int(i128 v) {
    const bool negative = v < 0;
    u128 u = negative ? static_cast<u128>(-(v + 1)) + 1
                                   : static_cast<u128>(v);
    Int hi(static_cast<unsigned long>(u >> 64));
    Int lo(static_cast<unsigned long>(u & 0xFFFFFFFFFFFFFFFFULL));
    Int out = (hi << 64) + lo;
    return negative ? Int(-out) : out;
  }

  SearchBudget budget_;
  std::int64_t plus_ = 0;
  std::int64_t minus_ = 0;
  std::vector<std::int64_t> divisors_;
};

CurvePoint to_point(const Hit& h) { return CurvePoint(QuadElem(h.x), QuadElem(h.y)); }

void require_rational(const Curve& curve) {
  if (!curve.field().is_rational())
    throw DomainError("point search runs over Q, got " + curve.to_string());
}

}  // namespace

std::vector<CurvePoint> naive_point_search(const Curve& curve, const SearchBudget& budget) {
  require_rational(curve);
  budget.validate();
  Scanner scanner(curve, budget);
  std::vector<Hit> hits;
  const std::int64_t top = scanner.max_height();
  scanner.scan_band(0, top == std::numeric_limits<std::int64_t>::max() ? top : top + 1, hits);
  std::sort(hits.begin(), hits.end(), hit_less);
  std::vector<CurvePoint> out;
  out.reserve(hits.size());
  for (const Hit& h : hits) out.push_back(to_point(h));
  return out;
}

std::optional<CurvePoint> first_point_of_order_gt2(const Curve& curve,
                                                   const SearchBudget& budget) {
  require_rational(curve);
  budget.validate();
  Scanner scanner(curve, budget);
  const std::int64_t top = scanner.max_height();
  // Doubling height bands [lo, hi); the minimal-height witness lies in the
  // first band that produces one.
  std::int64_t lo = 0, hi = 1;
  while (lo <= top) {
    std::vector<Hit> hits;
    scanner.scan_band(lo, hi, hits);
    std::sort(hits.begin(), hits.end(), hit_less);
    for (const Hit& h : hits)
      if (h.y != 0) return to_point(h);
    lo = hi;
    hi = hi > top / 2 ? top + 1 : hi * 2;
  }
  return std::nullopt;
}

}  // namespace thetacong
