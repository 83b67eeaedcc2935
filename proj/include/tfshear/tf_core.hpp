// Copyright 2026 The tfshear Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <complex>
#include <span>
#include <vector>

#include "tfshear/exponents.hpp"
#include "tfshear/mixed_norm.hpp"
#include "tfshear/signal.hpp"

namespace tfshear {

/// f^(xi) = int f(t) exp(-2 pi i t.xi) dt, as h^dim times the centered DFT.
/// The result lives on the grid with spacing 1/(Lh).
SampledSignal fourier(const SampledSignal& f);
/// Inverse of fourier(); the result has spacing 1/(L h_in).
SampledSignal inverse_fourier(const SampledSignal& F);

/// A point of R^dim (only the first dim entries are used).
using Vec2 = std::array<double, 2>;

/// f(t - x) for any real x, as the Fourier multiplier exp(-2 pi i x.xi).
/// Exact on the grid for integer multiples of h.
SampledSignal translate(const SampledSignal& f, Vec2 x);
/// exp(2 pi i xi.t) f(t). Periodic only for xi on the 1/(Lh) grid.
SampledSignal modulate(const SampledSignal& f, Vec2 xi);

struct ShiftAlignment {
    Vec2 x{};
    Vec2 xi{};
    /// False when x or xi had to be moved to the nearest grid point.
    bool aligned = true;
};

/// M_xi T_x f with x snapped to the h grid and xi to the 1/(Lh) grid.
SampledSignal tf_shift(const SampledSignal& f, Vec2 x, Vec2 xi, ShiftAlignment* snapped = nullptr);

/// D_lam f(t) = f(lam t). lam = 2 keeps every other sample, giving (L/2, h);
/// lam = 1/2 upsamples by zero padding in frequency, giving (2L, h).
/// Throws std::invalid_argument for any other lam.
SampledSignal dilate(const SampledSignal& f, double lam);

/// V_g f(x, xi) = int f(t) conj(g(t - x)) exp(-2 pi i xi.t) dt by the
/// Riemann sum on the signal grid. Evaluations sharing x reuse one
/// translated window.
class StftEvaluator {
public:
    /// f and g must share a grid; throws std::invalid_argument otherwise.
    StftEvaluator(const SampledSignal& f, const SampledSignal& g);

    std::complex<double> operator()(Vec2 x, Vec2 xi);
    /// Values at the given frequencies for one x.
    std::vector<std::complex<double>> row(Vec2 x, std::span<const Vec2> xis);
    /// Values at every frequency of the 1/(Lh) grid, in centered order.
    std::vector<std::complex<double>> spectrum(Vec2 x);

private:
    const std::vector<std::complex<double>>& product(Vec2 x);

    SampledSignal f_;
    SampledSignal g_hat_;
    Vec2 cached_x_{};
    bool has_cache_ = false;
    std::vector<std::complex<double>> cached_;
};

struct TFPoint {
    Vec2 x{};
    Vec2 xi{};
};

std::vector<std::complex<double>> stft_points(const SampledSignal& f, const SampledSignal& g,
                                              std::span<const TFPoint> points);

/// Lattice {(j x_step, l xi_step) : x_lo <= j <= x_hi, xi_lo <= l <= xi_hi}
/// on R x R (one dimension).
struct TFLattice {
    double x_step = 0.125;
    double xi_step = 0.125;
    int x_lo = -48, x_hi = 48;
    int xi_lo = -48, xi_hi = 48;

    /// |j| <= x_count, |l| <= xi_count.
    static TFLattice symmetric(double x_step, int x_count, double xi_step, int xi_count);
    std::size_t x_size() const { return static_cast<std::size_t>(x_hi - x_lo + 1); }
    std::size_t xi_size() const { return static_cast<std::size_t>(xi_hi - xi_lo + 1); }
};

/// Samples of V_g f on a TFLattice, values[(j - x_lo) * xi_size + (l - xi_lo)].
struct TFGrid {
    TFLattice lattice;
    std::vector<std::complex<double>> values;

    /// k indexes x, n indexes xi.
    Block as_block() const;
};

/// One-dimensional signals only.
TFGrid stft(const SampledSignal& f, const SampledSignal& g, const TFLattice& lattice);

/// max over points of |V_g f(x, xi) - exp(-2 pi i x.xi) V_{g^} f^(xi, -x)| / (1 + |V_g f(x, xi)|).
double check_fundamental_identity(const SampledSignal& f, const SampledSignal& g,
                                  std::span<const TFPoint> points);
/// max over points of |V_{D g} D f(x, w) - 2^d V_g f(x/2, 2w)| / (1 + 2^d |V_g f(x/2, 2w)|)
/// with D = D_{1/2}.
double check_scaling(const SampledSignal& f, const SampledSignal& g, std::span<const TFPoint> points);

/// Weight <x>^s_x <xi>^s_xi in physical time-frequency coordinates.
struct TFWeight {
    double s_x = 0.0;
    double s_xi = 0.0;
};

struct TFNorm {
    double value = 0.0;
    /// max of |V| m on the lattice boundary over its max on the whole
    /// lattice; small values mean the lattice captures the mass.
    double tail = 0.0;
};

/// L^(p,q)_m norm of a sampled STFT: inner over xi with q, outer over x
/// with p, scaled by the cell measure xi_step^(1/q) x_step^(1/p).
TFNorm wiener_grid_norm(const TFGrid& V, const Exponent& p, const Exponent& q, const TFWeight& m);
/// L^{p,q}_m: inner over x with p, outer over xi with q.
TFNorm modulation_grid_norm(const TFGrid& V, const Exponent& p, const Exponent& q, const TFWeight& m);

/// W^(p,q)_{1 (x) v_s} norm of f with window g.
TFNorm wiener_amalgam_norm(const SampledSignal& f, const SampledSignal& g, const Exponent& p,
                           const Exponent& q, double s, const TFLattice& lattice);
/// M^{p,q}_m norm with m = <x>^s_x <xi>^s_xi; the plain modulation norm uses {0, s}.
TFNorm modulation_norm(const SampledSignal& f, const SampledSignal& g, const Exponent& p,
                       const Exponent& q, const TFWeight& m, const TFLattice& lattice);

}  // namespace tfshear
