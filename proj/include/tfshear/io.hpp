// Copyright 2026 The tfshear Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <iosfwd>
#include <stdexcept>

#include "tfshear/mixed_norm.hpp"
#include "tfshear/signal.hpp"

namespace tfshear {

/// Malformed input data; the message names the offending line.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Signal text format:
///
///     signal <dim> <L> <h>
///     <re>,<im>          (L^dim lines, row-major)
///
/// Numbers are written with 17 significant digits so files round-trip.
void write_signal(std::ostream& os, const SampledSignal& s);
SampledSignal read_signal(std::istream& is);
SampledSignal load_signal(const std::filesystem::path& path);
void save_signal(const std::filesystem::path& path, const SampledSignal& s);

/// One-dimensional coefficient blocks as CSV with header "k,n,re,im",
/// k-major. Reading requires a full rectangle of (k, n) pairs.
void write_block_csv(std::ostream& os, const Block& b);
Block read_block_csv(std::istream& is);

/// "%.17g".
std::string format_real(double v);

}  // namespace tfshear
