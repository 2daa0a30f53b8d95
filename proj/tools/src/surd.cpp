// Copyright 2026 The thetacong Authors.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#include "surd.hpp"

#include <cctype>

#include "thetacong/errors.hpp"

namespace thetacong::cli {

namespace {

class Parser {
 public:
  Parser(const std::string& text, const Field& field) : text_(text), field_(field) {}

  QuadElem parse() {
    QuadElem v = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw DomainError("cannot parse \"" + text_ + "\" at position " + std::to_string(pos_) + ": " +
                      what);
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  QuadElem expr() {
    QuadElem v = term();
    for (;;) {
      if (eat('+')) v += term();
      else if (eat('-')) v -= term();
      else return v;
    }
  }

  QuadElem term() {
    QuadElem v = unary();
    for (;;) {
      if (eat('*')) {
        v *= unary();
      } else if (eat('/')) {
        QuadElem d = unary();
        if (d.is_zero()) fail("division by zero");
        v /= d;
      } else {
        return v;
      }
    }
  }

  QuadElem unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return primary();
  }

  Int integer() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return Int(text_.substr(start, pos_ - start));
  }

  QuadElem primary() {
    skip();
    if (eat('(')) {
      QuadElem v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (text_.compare(pos_, 4, "sqrt") == 0) {
      pos_ += 4;
      if (!eat('(')) fail("expected '(' after sqrt");
      const Int radicand = integer();
      if (!eat(')')) fail("expected ')'");
      return root(radicand);
    }
    return QuadElem(Rat(integer()));
  }

  QuadElem root(const Int& radicand) {
    if (radicand == 0) return QuadElem();
    const SqfDecomp d = sqf_decompose(radicand);
    if (d.core == 1) return QuadElem(Rat(d.root));
    if (field_.is_rational() || d.core != Int(static_cast<long>(field_.m())))
      fail("sqrt(" + radicand.get_str() + ") is not in " + field_.to_string());
    return QuadElem(Rat(0), Rat(d.root), field_);
  }

  const std::string& text_;
  Field field_;
  std::size_t pos_ = 0;
};

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

}  // namespace

QuadElem parse_surd(const std::string& text, const Field& field) {
  return Parser(text, field).parse().in(field);
}

std::vector<std::string> split_top_level(const std::string& text) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(trim(cur));
  return out;
}

}  // namespace thetacong::cli
