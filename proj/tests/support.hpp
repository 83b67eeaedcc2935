// Copyright 2026 The tfshear Authors
// SPDX-License-Identifier: Apache-2.0

// Shared fixtures for the unit tests and the acceptance runner.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "tfshear/lattice.hpp"
#include "tfshear/mixed_norm.hpp"
#include "tfshear/signal.hpp"
#include "tfshear/tf_core.hpp"

namespace tfshear::testing {

inline GridSpec acceptance_grid() { return GridSpec{1, 1024, 1.0 / 32.0}; }

struct NamedSignal {
    std::string name;
    SampledSignal signal;
};

/// Gaussian, first Hermite function, chirped Gaussian, three seeded noises.
inline std::vector<NamedSignal> acceptance_signals(const GridSpec& g = acceptance_grid()) {
    return {
        {"gaussian", gaussian(g)},
        {"hermite1", hermite(g, 1)},
        {"chirp", chirped_gaussian(g)},
        {"noise1", bandlimited_noise(g, 1)},
        {"noise2", bandlimited_noise(g, 2)},
        {"noise3", bandlimited_noise(g, 3)},
    };
}

inline SampledSignal random_signal(const GridSpec& g, std::mt19937_64& rng) {
    std::normal_distribution<double> n;
    SampledSignal s(g);
    for (auto& v : s.samples)
        v = {n(rng), n(rng)};
    return s;
}

/// Random points with |x|, |xi| <= radius in one dimension.
inline std::vector<TFPoint> random_points(std::size_t count, double radius, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-radius, radius);
    std::vector<TFPoint> pts(count);
    for (auto& p : pts) {
        p.x = {u(rng), 0.0};
        p.xi = {u(rng), 0.0};
    }
    return pts;
}

/// Block on a random window with about 30% zeros and complex Gaussian entries.
inline Block random_block(std::mt19937_64& rng, int dim, int max_side = 6) {
    std::uniform_int_distribution<int> side(1, max_side), off(-4, 4);
    std::vector<Interval> kax, nax;
    for (int i = 0; i < dim; ++i) {
        int lo = off(rng);
        kax.push_back({lo, lo + side(rng) - 1});
        lo = off(rng);
        nax.push_back({lo, lo + side(rng) - 1});
    }
    Block b{Box(kax), Box(nax)};
    std::normal_distribution<double> n;
    std::bernoulli_distribution keep(0.7);
    for (auto& v : b.values)
        v = keep(rng) ? cplx(n(rng), n(rng)) : cplx(0.0, 0.0);
    if (b.nonzeros() == 0)
        b.values.front() = 1.0;
    return b;
}

inline double max_abs_diff(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

inline double rel_diff(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

}  // namespace tfshear::testing
