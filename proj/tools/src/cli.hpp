// Copyright 2026 The thetacong Authors.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#pragma once

#include <iosfwd>

namespace thetacong::cli {

enum ExitCode : int {
  kOk = 0,
  kInvalidInput = 2,
  kInvalidTriangle = 3,
  kFixtureFailure = 4,
};

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace thetacong::cli
