// Copyright 2026 The tfshear Authors
// SPDX-License-Identifier: Apache-2.0

#include "tfshear/signal.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "tfshear/fft.hpp"

namespace tfshear {

using cplx = std::complex<double>;

void GridSpec::validate() const {
    if (dim != 1 && dim != 2)
        throw std::invalid_argument("signal dimension must be 1 or 2");
    if (L <= 0 || L % 2 != 0)
        throw std::invalid_argument("signal length must be positive and even");
    if (!(h > 0.0) || !std::isfinite(h))
        throw std::invalid_argument("grid spacing must be positive");
}

std::size_t GridSpec::size() const {
    return dim == 1 ? static_cast<std::size_t>(L) : static_cast<std::size_t>(L) * L;
}

SampledSignal::SampledSignal(GridSpec g) : grid(g) {
    grid.validate();
    samples.assign(grid.size(), cplx{});
}

double SampledSignal::energy() const {
    double s = 0.0;
    for (const auto& v : samples)
        s += std::norm(v);
    return s * std::pow(grid.h, grid.dim);
}

double SampledSignal::l2_norm() const { return std::sqrt(energy()); }

cplx inner(const SampledSignal& f, const SampledSignal& g) {
    if (f.grid.dim != g.grid.dim || f.grid.L != g.grid.L || f.grid.h != g.grid.h)
        throw std::invalid_argument("inner product of signals on different grids");
    cplx s{};
    for (std::size_t i = 0; i < f.samples.size(); ++i)
        s += f.samples[i] * std::conj(g.samples[i]);
    return s * std::pow(f.grid.h, f.grid.dim);
}

namespace {

template <class F>
SampledSignal tabulate(const GridSpec& g, F&& fn) {
    SampledSignal s(g);
    if (g.dim == 1) {
        for (int j = 0; j < g.L; ++j)
            s.samples[static_cast<std::size_t>(j)] = fn(g.coord(j), 0.0);
    } else {
        for (int j = 0; j < g.L; ++j)
            for (int k = 0; k < g.L; ++k)
                s.samples[static_cast<std::size_t>(j) * g.L + k] = fn(g.coord(j), g.coord(k));
    }
    return s;
}

double hermite_1d(int k, double t) {
    const double u = std::sqrt(2.0 * std::numbers::pi) * t;
    double prev = 0.0;
    double cur = std::pow(std::numbers::pi, -0.25) * std::exp(-0.5 * u * u);
    for (int n = 0; n < k; ++n) {
        const double next = std::sqrt(2.0 / (n + 1)) * u * cur - std::sqrt(double(n) / (n + 1)) * prev;
        prev = cur;
        cur = next;
    }
    return std::pow(2.0 * std::numbers::pi, 0.25) * cur;
}

// 53 random bits mapped to (0, 1).
double uniform_open(std::mt19937_64& rng) {
    return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
}

}  // namespace

SampledSignal gaussian(const GridSpec& g, double width) {
    if (!(width > 0.0))
        throw std::invalid_argument("gaussian width must be positive");
    const double c = std::numbers::pi / (width * width);
    return tabulate(g, [&](double x, double y) { return cplx(std::exp(-c * (x * x + y * y))); });
}

SampledSignal hermite(const GridSpec& g, int k) {
    if (k < 0)
        throw std::invalid_argument("hermite order must be nonnegative");
    return tabulate(g, [&](double x, double y) {
        return cplx(g.dim == 1 ? hermite_1d(k, x) : hermite_1d(k, x) * hermite_1d(k, y));
    });
}

SampledSignal chirped_gaussian(const GridSpec& g, double rate) {
    const double pi = std::numbers::pi;
    return tabulate(g, [&](double x, double y) {
        const double r2 = x * x + y * y;
        return std::exp(-pi * r2) * std::polar(1.0, pi * rate * r2);
    });
}

SampledSignal bandlimited_noise(const GridSpec& g, std::uint64_t seed, double band, double envelope) {
    if (!(band >= 0.0))
        throw std::invalid_argument("band must be nonnegative");
    if (!(envelope >= 0.0))
        throw std::invalid_argument("envelope width must be nonnegative");
    SampledSignal s(g);
    std::mt19937_64 rng(seed);
    const double step = g.dual_step();
    auto inside = [&](int m) { return std::abs((m - g.L / 2) * step) <= band + 1e-12; };
    auto draw = [&]() {
        // Box-Muller, written out so the stream does not depend on the
        // standard library's distribution implementation.
        const double u1 = uniform_open(rng), u2 = uniform_open(rng);
        const double r = std::sqrt(-2.0 * std::log(u1));
        return cplx(r * std::cos(2.0 * std::numbers::pi * u2), r * std::sin(2.0 * std::numbers::pi * u2));
    };
    if (g.dim == 1) {
        for (int m = 0; m < g.L; ++m)
            if (inside(m))
                s.samples[static_cast<std::size_t>(m)] = draw();
    } else {
        for (int m = 0; m < g.L; ++m)
            for (int n = 0; n < g.L; ++n)
                if (inside(m) && inside(n))
                    s.samples[static_cast<std::size_t>(m) * g.L + n] = draw();
    }
    // Coefficients c_m of exp(2 pi i xi_m t); evaluate at t_j.
    centered_dft(s.samples, g.dim, g.L, +1);
    if (envelope > 0.0) {
        const SampledSignal env = gaussian(g, envelope);
        for (std::size_t i = 0; i < s.samples.size(); ++i)
            s.samples[i] *= env.samples[i];
    }
    const double norm = s.l2_norm();
    if (norm > 0.0)
        for (auto& v : s.samples)
            v /= norm;
    return s;
}

}  // namespace tfshear
