// Copyright 2026 The tfshear Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tfshear::cli {

enum ExitCode : int {
    kOk = 0,
    kUsage = 2,
    kData = 3,
    kConsistency = 4,
};

/// Runs one command line (without the program name). Results go to `out`;
/// failures print a single line "error: <kind>: <message>" to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tfshear::cli
