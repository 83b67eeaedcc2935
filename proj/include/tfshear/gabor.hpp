// Copyright 2026 The tfshear Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

#include "tfshear/exponents.hpp"
#include "tfshear/mixed_norm.hpp"
#include "tfshear/signal.hpp"

namespace tfshear {

/// Finite Gabor system {M_{bn} T_{ak} g} on a periodic one-dimensional grid:
/// (T_{ak} g)_j = g_{(j - ak) mod L}, (M_{bn} f)_j = exp(2 pi i b n (j - L/2) / L) f_j.
/// In physical units the lattice is (a h) Z x (b / (L h)) Z.
///
/// Signal inner products carry the cell factor h (see inner()); coefficient
/// sequences use plain sums. Indices are centered: k in [-K/2, K/2) with
/// K = L/a, n in [-M/2, M/2) with M = L/b.
struct GaborSystem {
    SampledSignal window;
    int a = 1;
    int b = 1;

    /// Throws std::invalid_argument unless the window is one-dimensional
    /// and nonzero and a, b are positive divisors of L.
    void validate() const;
    int L() const { return window.grid.L; }
    int shifts() const { return L() / a; }
    int modulations() const { return L() / b; }
    /// L / (a b); at least 1 for frame candidates.
    double redundancy() const { return static_cast<double>(L()) / (static_cast<double>(a) * b); }
    Box k_window() const;
    Box n_window() const;
};

/// c_{k,n} = <f, M_{bn} T_{ak} g>.
Block analysis(const GaborSystem& sys, const SampledSignal& f);
/// sum c_{k,n} M_{bn} T_{ak} g; the adjoint of analysis().
SampledSignal synthesis(const GaborSystem& sys, const Block& c);
/// S f = synthesis(analysis(f)), evaluated through the Walnut representation.
SampledSignal frame_operator(const GaborSystem& sys, const SampledSignal& f);

struct FrameBounds {
    double A = 0.0;
    double B = 0.0;
    bool is_frame = false;
    /// False when either power iteration hit its iteration cap.
    bool converged = true;
    int iterations = 0;
};

/// Extremal eigenvalues of S by power iteration on S and on B I - S.
/// is_frame iff A > 1e-8 B.
FrameBounds frame_bounds(const GaborSystem& sys);

struct WalnutEnvelope {
    double lower = 0.0;
    double upper = 0.0;
};

/// min and max over j of sum_k |g_{j - ak}|^2.
WalnutEnvelope walnut_check(const SampledSignal& g, int a);

class DualWindowError : public std::runtime_error {
public:
    DualWindowError(const std::string& what, double condition)
        : std::runtime_error(what), condition_(condition) {}
    /// Estimated B / A, +inf when A vanished.
    double condition() const { return condition_; }

private:
    double condition_;
};

/// gamma = S^{-1} g by conjugate gradients, relative residual 1e-13 within
/// 10 L iterations. Throws DualWindowError when frame_bounds() rejects the
/// system or CG stalls.
SampledSignal dual_window(const GaborSystem& sys);

struct GaborNorm {
    /// l^(p,q) norm of the coefficients with weight <b n / (L h)>^s:
    /// inner over n with q, outer over k with p.
    double value = 0.0;
    /// value times (a h)^{1/p} (b / (L h))^{1/q}, the Riemann-sum scale of
    /// the continuous W^(p,q) norm.
    double scaled = 0.0;
};

GaborNorm gabor_wiener_norm(const GaborSystem& sys, const SampledSignal& f, const Exponent& p,
                            const Exponent& q, double s);

}  // namespace tfshear
