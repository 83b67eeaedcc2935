// Copyright 2026 The tfshear Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace tfshear {

/// Uniform periodic grid on [-Lh/2, Lh/2)^dim, t_j = (j - L/2) h per axis.
struct GridSpec {
    int dim = 1;
    int L = 1024;
    double h = 1.0 / 32.0;

    /// Throws std::invalid_argument unless dim is 1 or 2, L even and h > 0.
    void validate() const;
    double period() const { return L * h; }
    /// Spacing of the frequency grid, 1/(Lh).
    double dual_step() const { return 1.0 / (L * h); }
    std::size_t size() const;
    double coord(int j) const { return (j - L / 2) * h; }
};

/// Samples of a function on R^dim over a GridSpec, row-major.
struct SampledSignal {
    GridSpec grid;
    std::vector<std::complex<double>> samples;

    SampledSignal() = default;
    /// Zero-filled.
    explicit SampledSignal(GridSpec g);

    int dim() const { return grid.dim; }
    int L() const { return grid.L; }
    double h() const { return grid.h; }

    /// h^dim sum |f_j|^2.
    double energy() const;
    double l2_norm() const;
};

/// h^dim sum f_j conj(g_j). Grids must match.
std::complex<double> inner(const SampledSignal& f, const SampledSignal& g);

/// exp(-pi |t|^2 / width^2).
SampledSignal gaussian(const GridSpec& g, double width = 1.0);
/// L2-normalized Hermite function of order k, an eigenfunction of the
/// Fourier transform with eigenvalue (-i)^k. In two dimensions the tensor
/// product h_k (x) h_k.
SampledSignal hermite(const GridSpec& g, int k);
/// exp(-pi |t|^2) exp(i pi rate |t|^2).
SampledSignal chirped_gaussian(const GridSpec& g, double rate = 1.0);
/// Trigonometric polynomial with independent complex Gaussian coefficients
/// on the frequency grid points with |xi|_inf <= band, multiplied by
/// gaussian(g, envelope) and normalized to unit L2 norm. The envelope keeps
/// the signal localized (its spectrum leaks past band by roughly
/// 2/envelope); envelope = 0 leaves the periodic polynomial untouched.
/// Identical seeds give identical samples on every platform.
SampledSignal bandlimited_noise(const GridSpec& g, std::uint64_t seed, double band = 2.0,
                                double envelope = 4.0);

}  // namespace tfshear
