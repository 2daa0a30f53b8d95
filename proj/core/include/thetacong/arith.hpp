// Copyright 2026 The thetacong Authors.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

// Exact integer and rational helpers: squarefree parts, primality by trial
// division, Legendre and Hilbert symbols, and rational square roots.

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace thetacong {

using Int = mpz_class;
using Rat = mpq_class;

/// Builds a canonical rational num/den. Throws DomainError when den == 0.
Rat make_rat(const Int& num, const Int& den = 1);

/// N = root^2 * core with core squarefree.
struct SqfDecomp {
  Int core;
  Int root;
};

SqfDecomp sqf_decompose(const Int& n);

/// Squarefree part, sqf(n) = sqf_decompose(n).core.
Int sqf(const Int& n);

bool is_squarefree(const Int& n);
bool is_prime(const Int& n);

/// Prime factorization of |n| by trial division, as (prime, exponent) pairs.
std::vector<std::pair<Int, unsigned>> factorize(const Int& n);

/// Prime factors of |n| in increasing order, without multiplicity.
std::vector<Int> prime_divisors(const Int& n);

/// Largest k with p^k | n, for n != 0.
unsigned valuation(const Int& n, const Int& p);

/// A completion of Q: a prime p, or the real place.
class Place {
 public:
  static Place infinity() { return Place{}; }
  static Place prime(const Int& p);

  bool is_infinite() const { return p_ == 0; }
  const Int& p() const { return p_; }
  std::string to_string() const;

  friend bool operator==(const Place& a, const Place& b) { return a.p_ == b.p_; }
  friend bool operator<(const Place& a, const Place& b) {
    // Real place sorts first.
    return a.p_ < b.p_;
  }

 private:
  Place() = default;
  Int p_ = 0;
};

/// Legendre symbol (a/p) for an odd prime p; returns -1, 0 or 1.
int legendre(const Int& a, const Int& p);

/// Hilbert symbol (a,b)_v: 1 iff z^2 = a x^2 + b y^2 has a nonzero
/// solution over the completion Q_v.
int hilbert(const Int& a, const Int& b, const Place& place);

/// Principal (non-negative) square root of q when q is a rational square.
std::optional<Rat> is_square_rat(const Rat& q);

/// Principal square root of a non-negative integer square.
std::optional<Int> is_square_int(const Int& n);

/// Height of p/q in lowest terms: max(|p|, q).
Int height(const Rat& q);

std::string to_string(const Rat& q);

/// Parses "p" or "p/q"; throws DomainError on malformed input or q == 0.
Rat parse_rat(const std::string& text);

}  // namespace thetacong
