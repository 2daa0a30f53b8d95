// Copyright 2026 The thetacong Authors.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

// Batch checks from a JSON array of {kind, inputs, expected, paperNote}.
// All numbers are exact strings in the surd grammar.

#pragma once

#include <iosfwd>
#include <string>

namespace thetacong::cli {

/// 0 when every fixture passes (or the file is empty), 4 otherwise.
int run_fixtures(const std::string& path, bool json, std::ostream& out, std::ostream& err);

}  // namespace thetacong::cli
