// Copyright 2026 The thetacong Authors.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#pragma once

#include <stdexcept>
#include <string>

namespace thetacong {

/// Raised when an argument violates an operation's precondition
/// (non-squarefree n, bad angle, off-curve point, wrong triangle type, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A candidate triangle failed one of its defining identities.
class InvalidTriangle : public std::runtime_error {
 public:
  InvalidTriangle(std::string identity, const std::string& detail)
      : std::runtime_error("invalid triangle: " + identity + " fails (" + detail + ")"),
        identity_(std::move(identity)) {}

  const std::string& identity() const noexcept { return identity_; }

 private:
  std::string identity_;
};

/// A curve point is not of the form phi(T): some required square root is
/// missing in the base field.
class NotInImage : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A valid triangle matched none of the four types.
class OutsideClassification : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The two summands of a composition have the same x-coordinate.
class DegenerateSum : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace thetacong
