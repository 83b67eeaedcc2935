// Copyright 2026 The tfshear Authors
// SPDX-License-Identifier: Apache-2.0

#include "tfshear/tf_core.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "tfshear/fft.hpp"

namespace tfshear {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_same_grid(const SampledSignal& f, const SampledSignal& g) {
    if (f.grid.dim != g.grid.dim || f.grid.L != g.grid.L || f.grid.h != g.grid.h)
        throw std::invalid_argument("signals live on different grids");
}

// exp(i * sign * 2 pi * freq * coord(j)) for j in [0, L), exact every 64 steps.
std::vector<cplx> phase_table(const GridSpec& g, double freq, int sign) {
    std::vector<cplx> out(static_cast<std::size_t>(g.L));
    const cplx step = std::polar(1.0, sign * kTwoPi * freq * g.h);
    for (int j = 0; j < g.L; ++j) {
        if (j % 64 == 0)
            out[static_cast<std::size_t>(j)] = std::polar(1.0, sign * kTwoPi * freq * g.coord(j));
        else
            out[static_cast<std::size_t>(j)] = out[static_cast<std::size_t>(j - 1)] * step;
    }
    return out;
}

std::size_t wrap(long i, int L) {
    long r = i % L;
    return static_cast<std::size_t>(r < 0 ? r + L : r);
}

}  // namespace

SampledSignal fourier(const SampledSignal& f) {
    f.grid.validate();
    SampledSignal F = f;
    F.grid.h = f.grid.dual_step();
    centered_dft(F.samples, f.grid.dim, f.grid.L, -1);
    const double scale = std::pow(f.grid.h, f.grid.dim);
    for (auto& v : F.samples)
        v *= scale;
    return F;
}

SampledSignal inverse_fourier(const SampledSignal& F) {
    F.grid.validate();
    SampledSignal f = F;
    f.grid.h = F.grid.dual_step();
    centered_dft(f.samples, F.grid.dim, F.grid.L, +1);
    const double scale = std::pow(F.grid.h, F.grid.dim);
    for (auto& v : f.samples)
        v *= scale;
    return f;
}

SampledSignal translate(const SampledSignal& f, Vec2 x) {
    const GridSpec& g = f.grid;
    SampledSignal out = f;
    centered_dft(out.samples, g.dim, g.L, -1);
    const double dxi = g.dual_step();
    const double inv = 1.0 / std::pow(static_cast<double>(g.L), g.dim);
    if (g.dim == 1) {
        for (int m = 0; m < g.L; ++m)
            out.samples[static_cast<std::size_t>(m)] *= std::polar(inv, -kTwoPi * x[0] * (m - g.L / 2) * dxi);
    } else {
        std::vector<cplx> p0(static_cast<std::size_t>(g.L)), p1(static_cast<std::size_t>(g.L));
        for (int m = 0; m < g.L; ++m) {
            p0[static_cast<std::size_t>(m)] = std::polar(1.0, -kTwoPi * x[0] * (m - g.L / 2) * dxi);
            p1[static_cast<std::size_t>(m)] = std::polar(1.0, -kTwoPi * x[1] * (m - g.L / 2) * dxi);
        }
        for (int m = 0; m < g.L; ++m)
            for (int n = 0; n < g.L; ++n)
                out.samples[static_cast<std::size_t>(m) * g.L + n] *= inv * p0[static_cast<std::size_t>(m)] * p1[static_cast<std::size_t>(n)];
    }
    centered_dft(out.samples, g.dim, g.L, +1);
    return out;
}

SampledSignal modulate(const SampledSignal& f, Vec2 xi) {
    const GridSpec& g = f.grid;
    SampledSignal out = f;
    const auto e0 = phase_table(g, xi[0], +1);
    if (g.dim == 1) {
        for (std::size_t j = 0; j < out.samples.size(); ++j)
            out.samples[j] *= e0[j];
        return out;
    }
    const auto e1 = phase_table(g, xi[1], +1);
    for (int j = 0; j < g.L; ++j)
        for (int k = 0; k < g.L; ++k)
            out.samples[static_cast<std::size_t>(j) * g.L + k] *= e0[static_cast<std::size_t>(j)] * e1[static_cast<std::size_t>(k)];
    return out;
}

SampledSignal tf_shift(const SampledSignal& f, Vec2 x, Vec2 xi, ShiftAlignment* snapped) {
    const GridSpec& g = f.grid;
    ShiftAlignment a;
    long shift[2] = {0, 0};
    for (int ax = 0; ax < g.dim; ++ax) {
        shift[ax] = std::lround(x[static_cast<std::size_t>(ax)] / g.h);
        a.x[static_cast<std::size_t>(ax)] = static_cast<double>(shift[ax]) * g.h;
        a.xi[static_cast<std::size_t>(ax)] =
            static_cast<double>(std::lround(xi[static_cast<std::size_t>(ax)] / g.dual_step())) * g.dual_step();
        const double tol = 1e-9;
        if (std::abs(a.x[static_cast<std::size_t>(ax)] - x[static_cast<std::size_t>(ax)]) > tol * g.h ||
            std::abs(a.xi[static_cast<std::size_t>(ax)] - xi[static_cast<std::size_t>(ax)]) > tol * g.dual_step())
            a.aligned = false;
    }
    SampledSignal shifted(g);
    if (g.dim == 1) {
        for (int j = 0; j < g.L; ++j)
            shifted.samples[static_cast<std::size_t>(j)] = f.samples[wrap(j - shift[0], g.L)];
    } else {
        for (int j = 0; j < g.L; ++j)
            for (int k = 0; k < g.L; ++k)
                shifted.samples[static_cast<std::size_t>(j) * g.L + k] =
                    f.samples[wrap(j - shift[0], g.L) * g.L + wrap(k - shift[1], g.L)];
    }
    if (snapped)
        *snapped = a;
    return modulate(shifted, a.xi);
}

SampledSignal dilate(const SampledSignal& f, double lam) {
    const GridSpec& g = f.grid;
    if (lam == 2.0) {
        if (g.L % 4 != 0)
            throw std::invalid_argument("dilation by 2 needs L divisible by 4");
        GridSpec ng = g;
        ng.L = g.L / 2;
        SampledSignal out(ng);
        if (g.dim == 1) {
            for (int j = 0; j < ng.L; ++j)
                out.samples[static_cast<std::size_t>(j)] = f.samples[static_cast<std::size_t>(2 * j)];
        } else {
            for (int j = 0; j < ng.L; ++j)
                for (int k = 0; k < ng.L; ++k)
                    out.samples[static_cast<std::size_t>(j) * ng.L + k] =
                        f.samples[static_cast<std::size_t>(2 * j) * g.L + 2 * k];
        }
        return out;
    }
    if (lam != 0.5)
        throw std::invalid_argument("dilation factor must be 2 or 1/2");

    // Trigonometric interpolation at half steps; the Nyquist bin is split
    // evenly between the two new band edges.
    std::vector<cplx> F = f.samples;
    centered_dft(F, g.dim, g.L, -1);
    GridSpec ng = g;
    ng.L = 2 * g.L;
    SampledSignal out(ng);
    struct Target {
        std::size_t index;
        double weight;
    };
    std::vector<std::vector<Target>> map(static_cast<std::size_t>(g.L));
    for (int m = 0; m < g.L; ++m) {
        if (m == 0)
            map[0] = {{static_cast<std::size_t>(g.L / 2), 0.5}, {static_cast<std::size_t>(3 * g.L / 2), 0.5}};
        else
            map[static_cast<std::size_t>(m)] = {{static_cast<std::size_t>(m + g.L / 2), 1.0}};
    }
    const double inv = 1.0 / std::pow(static_cast<double>(g.L), g.dim);
    if (g.dim == 1) {
        for (int m = 0; m < g.L; ++m)
            for (const auto& t : map[static_cast<std::size_t>(m)])
                out.samples[t.index] += t.weight * inv * F[static_cast<std::size_t>(m)];
    } else {
        for (int m = 0; m < g.L; ++m)
            for (int n = 0; n < g.L; ++n)
                for (const auto& a : map[static_cast<std::size_t>(m)])
                    for (const auto& b : map[static_cast<std::size_t>(n)])
                        out.samples[a.index * ng.L + b.index] +=
                            a.weight * b.weight * inv * F[static_cast<std::size_t>(m) * g.L + n];
    }
    centered_dft(out.samples, ng.dim, ng.L, +1);
    return out;
}

StftEvaluator::StftEvaluator(const SampledSignal& f, const SampledSignal& g) : f_(f) {
    require_same_grid(f, g);
    g_hat_ = g;
    centered_dft(g_hat_.samples, g.grid.dim, g.grid.L, -1);
}

const std::vector<cplx>& StftEvaluator::product(Vec2 x) {
    if (has_cache_ && cached_x_ == x)
        return cached_;
    const GridSpec& g = f_.grid;
    // T_x g from the stored spectrum, then f conj(T_x g).
    std::vector<cplx> shifted = g_hat_.samples;
    const double dxi = g.dual_step();
    const double inv = 1.0 / std::pow(static_cast<double>(g.L), g.dim);
    if (g.dim == 1) {
        for (int m = 0; m < g.L; ++m)
            shifted[static_cast<std::size_t>(m)] *= std::polar(inv, -kTwoPi * x[0] * (m - g.L / 2) * dxi);
    } else {
        for (int m = 0; m < g.L; ++m) {
            const cplx pm = std::polar(inv, -kTwoPi * x[0] * (m - g.L / 2) * dxi);
            for (int n = 0; n < g.L; ++n)
                shifted[static_cast<std::size_t>(m) * g.L + n] *= pm * std::polar(1.0, -kTwoPi * x[1] * (n - g.L / 2) * dxi);
        }
    }
    centered_dft(shifted, g.dim, g.L, +1);
    for (std::size_t i = 0; i < shifted.size(); ++i)
        shifted[i] = f_.samples[i] * std::conj(shifted[i]);
    cached_ = std::move(shifted);
    cached_x_ = x;
    has_cache_ = true;
    return cached_;
}

std::vector<cplx> StftEvaluator::spectrum(Vec2 x) {
    std::vector<cplx> s = product(x);
    const GridSpec& g = f_.grid;
    centered_dft(s, g.dim, g.L, -1);
    const double cell = std::pow(g.h, g.dim);
    for (auto& v : s)
        v *= cell;
    return s;
}

cplx StftEvaluator::operator()(Vec2 x, Vec2 xi) {
    const Vec2 one[1] = {xi};
    return row(x, one)[0];
}

std::vector<cplx> StftEvaluator::row(Vec2 x, std::span<const Vec2> xis) {
    const auto& p = product(x);
    const GridSpec& g = f_.grid;
    const double cell = std::pow(g.h, g.dim);
    std::vector<cplx> out;
    out.reserve(xis.size());
    for (const Vec2& xi : xis) {
        const auto e0 = phase_table(g, xi[0], -1);
        cplx s{};
        if (g.dim == 1) {
            for (std::size_t j = 0; j < p.size(); ++j)
                s += p[j] * e0[j];
        } else {
            const auto e1 = phase_table(g, xi[1], -1);
            for (int j = 0; j < g.L; ++j) {
                cplx r{};
                const cplx* pr = p.data() + static_cast<std::size_t>(j) * g.L;
                for (int k = 0; k < g.L; ++k)
                    r += pr[k] * e1[static_cast<std::size_t>(k)];
                s += r * e0[static_cast<std::size_t>(j)];
            }
        }
        out.push_back(s * cell);
    }
    return out;
}

std::vector<cplx> stft_points(const SampledSignal& f, const SampledSignal& g, std::span<const TFPoint> points) {
    StftEvaluator V(f, g);
    // Visit points grouped by x so each translated window is built once.
    std::vector<std::size_t> order(points.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return points[a].x < points[b].x; });
    std::vector<cplx> out(points.size());
    for (std::size_t i : order)
        out[i] = V(points[i].x, points[i].xi);
    return out;
}

TFLattice TFLattice::symmetric(double x_step, int x_count, double xi_step, int xi_count) {
    if (!(x_step > 0.0) || !(xi_step > 0.0) || x_count < 0 || xi_count < 0)
        throw std::invalid_argument("invalid time-frequency lattice");
    return {x_step, xi_step, -x_count, x_count, -xi_count, xi_count};
}

Block TFGrid::as_block() const {
    Block b(Box({Interval{lattice.x_lo, lattice.x_hi}}), Box({Interval{lattice.xi_lo, lattice.xi_hi}}));
    b.values = values;
    return b;
}

TFGrid stft(const SampledSignal& f, const SampledSignal& g, const TFLattice& lat) {
    if (f.grid.dim != 1)
        throw std::invalid_argument("lattice STFT is implemented for one-dimensional signals");
    if (!(lat.x_step > 0.0) || !(lat.xi_step > 0.0) || lat.x_hi < lat.x_lo || lat.xi_hi < lat.xi_lo)
        throw std::invalid_argument("invalid time-frequency lattice");
    require_same_grid(f, g);
    TFGrid out;
    out.lattice = lat;
    out.values.assign(lat.x_size() * lat.xi_size(), cplx{});
    const GridSpec& gs = f.grid;
    const double dxi = gs.dual_step();
    const double ratio = lat.xi_step / dxi;
    const long r = std::lround(ratio);
    // On-grid frequencies come from one FFT per x; others by direct sums.
    const bool aligned = r >= 1 && std::abs(ratio - static_cast<double>(r)) < 1e-9 &&
                         std::max(std::abs(lat.xi_lo), std::abs(lat.xi_hi)) * r < gs.L / 2;
    StftEvaluator V(f, g);
    std::vector<Vec2> xis;
    for (int l = lat.xi_lo; l <= lat.xi_hi; ++l)
        xis.push_back({l * lat.xi_step, 0.0});
    for (int j = lat.x_lo; j <= lat.x_hi; ++j) {
        const Vec2 x{j * lat.x_step, 0.0};
        cplx* dst = out.values.data() + static_cast<std::size_t>(j - lat.x_lo) * lat.xi_size();
        if (aligned) {
            const auto spec = V.spectrum(x);
            for (int l = lat.xi_lo; l <= lat.xi_hi; ++l)
                dst[l - lat.xi_lo] = spec[static_cast<std::size_t>(gs.L / 2 + l * r)];
            continue;
        }
        const auto vals = V.row(x, xis);
        std::copy(vals.begin(), vals.end(), dst);
    }
    return out;
}

double check_fundamental_identity(const SampledSignal& f, const SampledSignal& g, std::span<const TFPoint> points) {
    StftEvaluator lhs(f, g);
    StftEvaluator rhs(fourier(f), fourier(g));
    double worst = 0.0;
    for (const auto& pt : points) {
        const cplx a = lhs(pt.x, pt.xi);
        const double dot = pt.x[0] * pt.xi[0] + (f.grid.dim == 2 ? pt.x[1] * pt.xi[1] : 0.0);
        const cplx b = std::polar(1.0, -kTwoPi * dot) * rhs(pt.xi, Vec2{-pt.x[0], -pt.x[1]});
        worst = std::max(worst, std::abs(a - b) / (1.0 + std::abs(a)));
    }
    return worst;
}

double check_scaling(const SampledSignal& f, const SampledSignal& g, std::span<const TFPoint> points) {
    StftEvaluator lhs(dilate(f, 0.5), dilate(g, 0.5));
    StftEvaluator rhs(f, g);
    const double factor = std::pow(2.0, f.grid.dim);
    double worst = 0.0;
    for (const auto& pt : points) {
        const cplx a = lhs(pt.x, pt.xi);
        const cplx b = factor * rhs(Vec2{pt.x[0] / 2, pt.x[1] / 2}, Vec2{2 * pt.xi[0], 2 * pt.xi[1]});
        worst = std::max(worst, std::abs(a - b) / (1.0 + std::abs(b)));
    }
    return worst;
}

namespace {

WeightSpec tf_weight(const TFGrid& V, const TFWeight& m) {
    const TFLattice& lat = V.lattice;
    std::vector<double> table(V.values.size());
    for (int j = lat.x_lo; j <= lat.x_hi; ++j) {
        const double wx = std::pow(std::hypot(1.0, j * lat.x_step), m.s_x);
        for (int l = lat.xi_lo; l <= lat.xi_hi; ++l)
            table[static_cast<std::size_t>(j - lat.x_lo) * lat.xi_size() + static_cast<std::size_t>(l - lat.xi_lo)] =
                wx * std::pow(std::hypot(1.0, l * lat.xi_step), m.s_xi);
    }
    return WeightSpec::sampled(Box({Interval{lat.x_lo, lat.x_hi}}), Box({Interval{lat.xi_lo, lat.xi_hi}}),
                               std::move(table));
}

double tail_ratio(const TFGrid& V, const WeightSpec& w) {
    const TFLattice& lat = V.lattice;
    double edge = 0.0, all = 0.0;
    for (int j = lat.x_lo; j <= lat.x_hi; ++j)
        for (int l = lat.xi_lo; l <= lat.xi_hi; ++l) {
            const std::size_t i =
                static_cast<std::size_t>(j - lat.x_lo) * lat.xi_size() + static_cast<std::size_t>(l - lat.xi_lo);
            const double v = std::abs(V.values[i]) * w.table()[i];
            all = std::max(all, v);
            if (j == lat.x_lo || j == lat.x_hi || l == lat.xi_lo || l == lat.xi_hi)
                edge = std::max(edge, v);
        }
    return all > 0.0 ? edge / all : 0.0;
}

double cell_scale(const TFLattice& lat, const Exponent& p, const Exponent& q) {
    return std::pow(lat.x_step, p.recip_value()) * std::pow(lat.xi_step, q.recip_value());
}

}  // namespace

TFNorm wiener_grid_norm(const TFGrid& V, const Exponent& p, const Exponent& q, const TFWeight& m) {
    const WeightSpec w = tf_weight(V, m);
    return {norm_l_paren_pq(V.as_block(), p, q, w) * cell_scale(V.lattice, p, q), tail_ratio(V, w)};
}

TFNorm modulation_grid_norm(const TFGrid& V, const Exponent& p, const Exponent& q, const TFWeight& m) {
    const WeightSpec w = tf_weight(V, m);
    return {norm_lpq(V.as_block(), p, q, w) * cell_scale(V.lattice, p, q), tail_ratio(V, w)};
}

TFNorm wiener_amalgam_norm(const SampledSignal& f, const SampledSignal& g, const Exponent& p,
                           const Exponent& q, double s, const TFLattice& lattice) {
    return wiener_grid_norm(stft(f, g, lattice), p, q, TFWeight{0.0, s});
}

TFNorm modulation_norm(const SampledSignal& f, const SampledSignal& g, const Exponent& p,
                       const Exponent& q, const TFWeight& m, const TFLattice& lattice) {
    return modulation_grid_norm(stft(f, g, lattice), p, q, m);
}

}  // namespace tfshear
