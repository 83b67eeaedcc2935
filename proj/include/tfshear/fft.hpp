// Copyright 2026 The tfshear Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <vector>

namespace tfshear {

/// Unnormalized DFT over a row-major L^dim array,
/// X_m = sum_j x_j exp(sign * 2 pi i j.m / L). sign is -1 or +1.
/// Plans are created once per shape and shared between threads.
void dft(std::vector<std::complex<double>>& data, int dim, int L, int sign);

/// Same transform with both indices centered at L/2:
/// X_m = sum_j x_j exp(sign * 2 pi i (j - L/2).(m - L/2) / L).
void centered_dft(std::vector<std::complex<double>>& data, int dim, int L, int sign);

}  // namespace tfshear
