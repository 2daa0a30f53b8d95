// Copyright 2026 The thetacong Authors.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

// Parser for exact surd expressions such as "(41 - 11*sqrt(13))/3".
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := '-' unary | '+' unary | primary
//   primary := INT | 'sqrt' '(' INT ')' | '(' expr ')'
//
// sqrt(M) must be rational or lie in the given field.

#pragma once

#include <string>
#include <vector>

#include "thetacong/quad.hpp"

namespace thetacong::cli {

/// Throws DomainError with the offending position on malformed input.
QuadElem parse_surd(const std::string& text, const Field& field);

/// Splits on commas outside parentheses; pieces are trimmed.
std::vector<std::string> split_top_level(const std::string& text);

}  // namespace thetacong::cli
