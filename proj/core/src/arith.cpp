// Copyright 2026 The thetacong Authors.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#include "thetacong/arith.hpp"

#include <cctype>

#include "thetacong/errors.hpp"

namespace thetacong {

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

namespace {

// Trial division of |n|; calls visit(p, exponent) for each prime factor.
template <typename Visit>
void trial_factor(Int n, Visit&& visit) {
  n = abs(n);
  if (n == 0) return;
  unsigned e = 0;
  while (mpz_even_p(n.get_mpz_t())) {
    n /= 2;
    ++e;
  }
  if (e) visit(Int(2), e);
  for (Int p = 3; p * p <= n; p += 2) {
    e = 0;
    while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
      n /= p;
      ++e;
    }
    if (e) visit(p, e);
  }
  if (n > 1) visit(n, 1u);
}

}  // namespace

SqfDecomp sqf_decompose(const Int& n) {
  if (n <= 0) throw DomainError("sqf_decompose requires N >= 1, got " + n.get_str());
  SqfDecomp out{1, 1};
  trial_factor(n, [&](const Int& p, unsigned e) {
    for (unsigned i = 0; i < e / 2; ++i) out.root *= p;
    if (e % 2) out.core *= p;
  });
  return out;
}

Int sqf(const Int& n) { return sqf_decompose(n).core; }

bool is_squarefree(const Int& n) {
  if (n == 0) return false;
  return sqf_decompose(abs(n)).root == 1;
}

bool is_prime(const Int& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

std::vector<std::pair<Int, unsigned>> factorize(const Int& n) {
  std::vector<std::pair<Int, unsigned>> out;
  trial_factor(n, [&](const Int& p, unsigned e) { out.emplace_back(p, e); });
  return out;
}

std::vector<Int> prime_divisors(const Int& n) {
  std::vector<Int> out;
  trial_factor(n, [&](const Int& p, unsigned) { out.push_back(p); });
  return out;
}

unsigned valuation(const Int& n, const Int& p) {
  if (n == 0) throw DomainError("valuation of zero");
  Int m = n;
  unsigned k = 0;
  while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
    m /= p;
    ++k;
  }
  return k;
}

Place Place::prime(const Int& p) {
  if (!is_prime(p)) throw DomainError("place must be a prime, got " + p.get_str());
  Place out;
  out.p_ = p;
  return out;
}

std::string Place::to_string() const { return is_infinite() ? "inf" : p_.get_str(); }

int legendre(const Int& a, const Int& p) {
  if (p == 2 || !is_prime(p)) throw DomainError("legendre requires an odd prime, got " + p.get_str());
  Int r = a % p;
  if (r < 0) r += p;
  return mpz_legendre(r.get_mpz_t(), p.get_mpz_t());
}

namespace {

// 1 when u = 3 (mod 4), i.e. (u-1)/2 is odd.
int eps2(const Int& u) {
  Int r = u % 4;
  if (r < 0) r += 4;
  return r == 3 ? 1 : 0;
}

// 1 when u = 3, 5 (mod 8), i.e. (u^2-1)/8 is odd.
int omega2(const Int& u) {
  Int r = u % 8;
  if (r < 0) r += 8;
  return (r == 3 || r == 5) ? 1 : 0;
}

}  // namespace

int hilbert(const Int& a, const Int& b, const Place& place) {
  if (a == 0 || b == 0) throw DomainError("hilbert symbol needs nonzero arguments");
  if (place.is_infinite()) return (a < 0 && b < 0) ? -1 : 1;

  const Int& p = place.p();
  unsigned alpha = valuation(a, p);
  unsigned beta = valuation(b, p);
  Int pa, pb;
  mpz_pow_ui(pa.get_mpz_t(), p.get_mpz_t(), alpha);
  mpz_pow_ui(pb.get_mpz_t(), p.get_mpz_t(), beta);
  Int u = a / pa;
  Int v = b / pb;

  if (p == 2) {
    int e = eps2(u) * eps2(v) + static_cast<int>(alpha) * omega2(v) +
            static_cast<int>(beta) * omega2(u);
    return (e % 2) ? -1 : 1;
  }

  int sign = 1;
  Int pm4 = p % 4;
  if ((alpha % 2) && (beta % 2) && pm4 == 3) sign = -sign;
  if (beta % 2) sign *= legendre(u, p);
  if (alpha % 2) sign *= legendre(v, p);
  return sign;
}

std::optional<Int> is_square_int(const Int& n) {
  if (n < 0) return std::nullopt;
  if (!mpz_perfect_square_p(n.get_mpz_t())) return std::nullopt;
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

std::optional<Rat> is_square_rat(const Rat& q) {
  if (q < 0) return std::nullopt;
  auto num = is_square_int(q.get_num());
  if (!num) return std::nullopt;
  auto den = is_square_int(q.get_den());
  if (!den) return std::nullopt;
  return make_rat(*num, *den);
}

Int height(const Rat& q) {
  Int p = abs(q.get_num());
  return p > q.get_den() ? p : Int(q.get_den());
}

std::string to_string(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

bool is_integer_literal(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

Int parse_int(const std::string& s) {
  if (!is_integer_literal(s)) throw DomainError("malformed integer '" + s + "'");
  return Int(s[0] == '+' ? s.substr(1) : s, 10);
}

}  // namespace

Rat parse_rat(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return make_rat(parse_int(text));
  Int den = parse_int(text.substr(slash + 1));
  if (den == 0) throw DomainError("rational '" + text + "' has zero denominator");
  return make_rat(parse_int(text.substr(0, slash)), den);
}

}  // namespace thetacong
