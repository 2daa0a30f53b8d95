// Copyright 2026 The thetacong Authors.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#include "thetacong/quad.hpp"

#include "thetacong/errors.hpp"

namespace thetacong {

Field Field::quadratic(std::int64_t m) {
  if (m <= 1 || !is_squarefree(Int(static_cast<long>(m))))
    throw DomainError("m must be a squarefree integer > 1, got " + std::to_string(m));
  return Field(m);
}

std::string Field::to_string() const {
  return is_rational() ? "Q" : "Q(sqrt(" + std::to_string(m_) + "))";
}

Field join(const Field& a, const Field& b) {
  if (a.is_rational()) return b;
  if (b.is_rational() || a == b) return a;
  throw DomainError("elements of " + a.to_string() + " and " + b.to_string() + " do not mix");
}

QuadElem::QuadElem(const Rat& a, const Rat& b, const Field& field) : a_(a), b_(b), field_(field) {
  if (field_.is_rational() && b_ != 0) throw DomainError("irrational part over Q");
}

QuadElem QuadElem::sqrt_m(const Field& field) {
  if (field.is_rational()) throw DomainError("sqrt(m) requested over Q");
  return QuadElem(0, 1, field);
}

Rat QuadElem::norm() const {
  Rat m(static_cast<long>(field_.m()));
  return Rat(a_ * a_ - m * b_ * b_);
}

QuadElem QuadElem::in(const Field& field) const {
  return QuadElem(a_, b_, join(field_, field));
}

QuadElem& QuadElem::operator+=(const QuadElem& o) {
  field_ = join(field_, o.field_);
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

QuadElem& QuadElem::operator-=(const QuadElem& o) {
  field_ = join(field_, o.field_);
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

QuadElem& QuadElem::operator*=(const QuadElem& o) {
  field_ = join(field_, o.field_);
  Rat m(static_cast<long>(field_.m()));
  Rat a = a_ * o.a_ + m * b_ * o.b_;
  Rat b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

QuadElem& QuadElem::operator/=(const QuadElem& o) {
  if (o.is_zero()) throw DomainError("division by zero in " + join(field_, o.field_).to_string());
  Rat n = o.norm();
  *this *= o.conj();
  a_ /= n;
  b_ /= n;
  return *this;
}

std::string QuadElem::to_string() const {
  if (b_ == 0) return thetacong::to_string(a_);
  std::string surd = "sqrt(" + std::to_string(field_.m()) + ")";
  std::string bpart;
  Rat babs = b_ < 0 ? Rat(-b_) : b_;
  if (babs == 1)
    bpart = surd;
  else if (babs.get_den() == 1)
    bpart = babs.get_num().get_str() + "*" + surd;
  else if (babs.get_num() == 1)
    bpart = surd + "/" + babs.get_den().get_str();
  else
    bpart = babs.get_num().get_str() + "*" + surd + "/" + babs.get_den().get_str();
  if (a_ == 0) return (b_ < 0 ? "-" : "") + bpart;
  return thetacong::to_string(a_) + (b_ < 0 ? " - " : " + ") + bpart;
}

int quad_sign(const QuadElem& x) {
  int sa = sgn(x.a());
  int sb = sgn(x.b());
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Mixed signs: the larger of |a| and |b| sqrt(m) wins.
  Rat m(static_cast<long>(x.field().m()));
  Rat lhs = x.a() * x.a();
  Rat rhs = m * x.b() * x.b();
  return lhs > rhs ? sa : sb;
}

int compare(const QuadElem& x, const QuadElem& y) { return quad_sign(x - y); }

QuadElem abs(const QuadElem& x) { return quad_sign(x) < 0 ? -x : x; }

namespace {

std::optional<QuadElem> principal(QuadElem r) {
  if (quad_sign(r) < 0) r = -r;
  return r;
}

}  // namespace

std::optional<QuadElem> sqrt_in(const QuadElem& x0, const Field& field) {
  const QuadElem x = x0.in(field);
  if (quad_sign(x) < 0) return std::nullopt;
  if (x.is_zero()) return QuadElem(Rat(0), Rat(0), field);

  if (field.is_rational()) {
    auto r = is_square_rat(x.a());
    if (!r) return std::nullopt;
    return QuadElem(*r);
  }

  const Rat m(static_cast<long>(field.m()));
  if (x.b() == 0) {
    if (auto r = is_square_rat(x.a())) return QuadElem(*r, Rat(0), field);
    if (auto r = is_square_rat(Rat(x.a() / m))) return QuadElem(Rat(0), *r, field);
    return std::nullopt;
  }

  // (c + d sqrt m)^2 = a + b sqrt m  <=>  c^2 + m d^2 = a, 2cd = b.
  // Then c^2 is a root of t^2 - a t + m b^2 / 4, so c^2 = (a +- n0)/2 with
  // n0^2 = a^2 - m b^2.
  auto n0 = is_square_rat(x.norm());
  if (!n0) return std::nullopt;
  for (int branch : {1, -1}) {
    Rat c2 = (x.a() + branch * *n0) / 2;
    if (c2 <= 0) continue;
    auto c = is_square_rat(c2);
    if (!c) continue;
    Rat d = x.b() / (2 * *c);
    QuadElem r(*c, d, field);
    if (r * r == x) return principal(r);
  }
  return std::nullopt;
}

std::optional<QuadElem> is_square_quad(const QuadElem& x) { return sqrt_in(x, x.field()); }

}  // namespace thetacong
