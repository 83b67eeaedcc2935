// Copyright 2026 The tfshear Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tfshear/exponents.hpp"
#include "tfshear/mixed_norm.hpp"

namespace tfshear {

/// (Ta)_{k,n} = a_{k-n,n}. The output k-window is k_window + n_window.
Block shear_apply(const Block& a);

/// (T^-1 b)_{k,n} = b_{k+n,n}. Without a target the output k-window is the
/// full preimage b.k_window - b.n_window.
Block shear_inverse(const Block& b, const std::optional<Box>& k_window = std::nullopt);

enum class WitnessId { row_delta, column_delta, antidiagonal, box, row_profile_box };

std::string to_string(WitnessId id);
/// Throws std::invalid_argument on an unknown name.
WitnessId parse_witness_id(std::string_view name);
bool requires_profile(WitnessId id);

/// Coefficient rule b_i on |i|_inf <= N.
struct Profile {
    enum class Kind { ones, point, power, custom };
    Kind kind = Kind::ones;
    /// power: b_i = <i>^exponent.
    double exponent = 0.0;
    /// custom: used verbatim over its own window.
    Sequence values;

    static Profile ones() { return {}; }
    /// delta at i = (N, 0, ..., 0).
    static Profile point() { return {Kind::point, 0.0, {}}; }
    static Profile power(double e) { return {Kind::power, e, {}}; }
    static Profile custom(Sequence b) { return {Kind::custom, 0.0, std::move(b)}; }

    Sequence realize(int d, int N) const;
    std::string to_string() const;
};

struct WitnessFamily {
    WitnessId id = WitnessId::box;
    std::optional<Profile> profile;
    int N = 1;
};

/// Throws std::invalid_argument when the family needs a profile and has none.
Block make_witness(const WitnessFamily& f, int d);

/// ||Ta||_{l^(p2,q2)} / ||a||_{l^(p1,q1)_{1 (x) v_s}}. Throws std::domain_error
/// when the denominator vanishes.
double ratio(const Block& a, int d, const ExponentQuad& quad, double s);

struct SlopeFit {
    double slope = 0.0;
    double intercept = 0.0;
    /// Root-mean-square residual of log(ratio) about the fitted line.
    double residual = 0.0;
};

/// Least squares of log y against log x. Needs >= 2 points with x, y > 0.
SlopeFit fit_loglog(std::span<const double> x, std::span<const double> y);

struct GrowthResult {
    std::vector<int> Ns;
    std::vector<double> ratios;
    SlopeFit fit;
};

/// Ratios of the family at each N and their log-log fit. Needs >= 3
/// increasing scales; throws std::domain_error on a zero ratio.
GrowthResult growth_slope(WitnessId id, const std::optional<Profile>& profile, int d,
                          const ExponentQuad& quad, double s, std::span<const int> Ns);

struct FracIntegral {
    Sequence value;
    int radius = 0;
    double lambda = 0.0;
    int dim = 1;
    /// ||b||_1, used by tail_bound.
    double input_l1 = 0.0;

    /// Upper bound for the l^r norm of the part of I_lambda b dropped by
    /// truncating the kernel at |n|_inf <= radius. +inf if the kernel tail
    /// is not in l^r.
    double tail_bound(const Exponent& r) const;
};

/// (I_lambda b)_k = sum_{|n|_inf <= R} b_{k-n} <n>^{-(d - lambda)} by direct
/// summation. R defaults to 8x the widest axis of b's window.
/// Throws std::invalid_argument unless 0 < lambda < d.
FracIntegral frac_integral_apply(const Sequence& b, double lambda, int d,
                                 std::optional<int> radius = std::nullopt);

}  // namespace tfshear
