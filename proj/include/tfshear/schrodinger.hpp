// Copyright 2026 The tfshear Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tfshear/decision.hpp"
#include "tfshear/exponents.hpp"
#include "tfshear/shear.hpp"
#include "tfshear/signal.hpp"
#include "tfshear/tf_core.hpp"

namespace tfshear {

/// Fourier multipliers of chirp type.
///
/// chirp(t) has symbol exp(-i pi t |xi|^2) and free_schrodinger(t0) has
/// symbol exp(-i pi t0 |2 xi|^2), so free_schrodinger(1) is e^{i Delta}
/// for the transform f^(xi) = int f(t) exp(-2 pi i t.xi) dt. In the
/// physics normalization exp(-4 pi^2 i t |xi|^2), free_schrodinger(t0)
/// corresponds to time t = t0 / pi.
struct PropagatorSpec {
    enum class Kind { chirp, free_schrodinger };
    Kind kind = Kind::chirp;
    double t = 1.0;

    static PropagatorSpec chirp(double t) { return {Kind::chirp, t}; }
    static PropagatorSpec free_schrodinger(double t0) { return {Kind::free_schrodinger, t0}; }

    /// Symbol at one frequency point.
    std::complex<double> symbol(double xi_sq) const;
    /// "chirp:<t>" or "schrodinger:<t0>".
    std::string to_string() const;
    /// Inverse of to_string; throws std::invalid_argument.
    static PropagatorSpec parse(std::string_view text);
};

enum class PropagatorPath {
    /// Multiply the spectrum by the symbol.
    direct,
    /// D_{1/2} chirp(t0) D_2 for free_schrodinger; same as direct for chirp.
    /// Needs L divisible by 4.
    dilation,
};

SampledSignal apply_propagator(const PropagatorSpec& spec, const SampledSignal& f,
                               PropagatorPath path = PropagatorPath::direct);

struct PointResidual {
    TFPoint point;
    /// V_{chirp g}(chirp f)(x, w).
    std::complex<double> lhs;
    /// exp(-i pi |w|^2) V_g f(x - w, w).
    std::complex<double> rhs;
    double residual = 0.0;
};

struct MagicReport {
    double max_residual = 0.0;
    /// Largest residuals first.
    std::vector<PointResidual> worst;
};

/// Residuals |lhs - rhs| / (1 + |rhs|) of the chirp magic formula with
/// chirp = chirp(1), keeping the `keep` worst points.
MagicReport magic_formula_report(const SampledSignal& f, const SampledSignal& g,
                                 std::span<const TFPoint> points, std::size_t keep = 5);
double magic_formula_residual(const SampledSignal& f, const SampledSignal& g, std::span<const TFPoint> points);

/// max over |k|, |n| <= K of
/// ||V_{chirp g}(chirp f)(k/N, n/N)| - |V_g f((k-n)/N, n/N)|| / (1 + |V_g f((k-n)/N, n/N)|).
/// One-dimensional signals.
double lattice_shear_check(const SampledSignal& f, const SampledSignal& g, int N, int K);

/// sum over (k, n) of b_{k,n} M_{n step} T_{4 k step} g, with the block
/// window shifted so its (rounded) center sits at the origin. The 4:1 aspect makes
/// e^{i Delta} act on the coefficients as the shear (k, n) -> (k + n, n).
/// One-dimensional; step must be a multiple of both h and 1/(Lh).
SampledSignal gabor_sum(const Block& b, const SampledSignal& g, double step);

struct TransportSample {
    double scale = 0.0;
    /// ||f||_{W^(p1,q1)_{1 (x) v_s}}.
    double source_norm = 0.0;
    /// ||e^{i Delta} f||_{W^(p2,q2)}.
    double target_norm = 0.0;
    double ratio = 0.0;
    /// Larger of the two lattice tail reports.
    double tail = 0.0;
};

struct TransportReport {
    ExponentQuad quad;
    double s = 0.0;
    Verdict verdict;
    std::vector<TransportSample> samples;
    /// max ratio / min ratio over the family.
    double spread = 0.0;
    /// Smallest ratio(i+1) / ratio(i).
    double min_step_growth = 0.0;
};

/// Ratios ||e^{i Delta} f||_{W^(p2,q2)} / ||f||_{W^(p1,q1)_{1 (x) v_s}} over a
/// family of one-dimensional signals on a shared grid. `scales` labels the
/// members and must have the family's size.
TransportReport norm_transport_demo(std::span<const SampledSignal> family, std::span<const double> scales,
                                    const ExponentQuad& quad, double s, const TFLattice& lattice);

/// Lattice with steps 1/4 spanning the whole period in x and |xi| <= xi_max.
TFLattice transport_lattice(const GridSpec& g, double xi_max);

}  // namespace tfshear
