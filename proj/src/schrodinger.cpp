// Copyright 2026 The tfshear Authors
// SPDX-License-Identifier: Apache-2.0

#include "tfshear/schrodinger.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "tfshear/fft.hpp"

namespace tfshear {

namespace {

constexpr double kPi = std::numbers::pi;

std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

SampledSignal multiply_symbol(const PropagatorSpec& spec, const SampledSignal& f) {
    const GridSpec& g = f.grid;
    g.validate();
    SampledSignal out = f;
    if (spec.kind == PropagatorSpec::Kind::chirp && spec.t == 0.0)
        return out;
    centered_dft(out.samples, g.dim, g.L, -1);
    const double dxi = g.dual_step();
    const double inv = 1.0 / std::pow(static_cast<double>(g.L), g.dim);
    if (g.dim == 1) {
        for (int m = 0; m < g.L; ++m) {
            const double xi = (m - g.L / 2) * dxi;
            out.samples[static_cast<std::size_t>(m)] *= inv * spec.symbol(xi * xi);
        }
    } else {
        for (int m = 0; m < g.L; ++m)
            for (int n = 0; n < g.L; ++n) {
                const double a = (m - g.L / 2) * dxi, b = (n - g.L / 2) * dxi;
                out.samples[static_cast<std::size_t>(m) * g.L + n] *= inv * spec.symbol(a * a + b * b);
            }
    }
    centered_dft(out.samples, g.dim, g.L, +1);
    return out;
}

double dot(Vec2 a, Vec2 b, int dim) { return a[0] * b[0] + (dim == 2 ? a[1] * b[1] : 0.0); }

}  // namespace

std::complex<double> PropagatorSpec::symbol(double xi_sq) const {
    const double scale = kind == Kind::chirp ? t : 4.0 * t;
    return std::polar(1.0, -kPi * scale * xi_sq);
}

std::string PropagatorSpec::to_string() const {
    return (kind == Kind::chirp ? "chirp:" : "schrodinger:") + format_double(t);
}

PropagatorSpec PropagatorSpec::parse(std::string_view text) {
    const auto colon = text.find(':');
    const std::string_view name = text.substr(0, colon);
    double t = 1.0;
    if (colon != std::string_view::npos) {
        const std::string_view num = text.substr(colon + 1);
        auto res = std::from_chars(num.data(), num.data() + num.size(), t);
        if (res.ec != std::errc() || res.ptr != num.data() + num.size() || !std::isfinite(t))
            throw std::invalid_argument("bad propagator time '" + std::string(num) + "'");
    }
    if (name == "chirp")
        return chirp(t);
    if (name == "schrodinger" || name == "free_schrodinger")
        return free_schrodinger(t);
    throw std::invalid_argument("unknown propagator '" + std::string(name) + "'");
}

SampledSignal apply_propagator(const PropagatorSpec& spec, const SampledSignal& f, PropagatorPath path) {
    if (path == PropagatorPath::direct || spec.kind == PropagatorSpec::Kind::chirp)
        return multiply_symbol(spec, f);
    return dilate(multiply_symbol(PropagatorSpec::chirp(spec.t), dilate(f, 2.0)), 0.5);
}

MagicReport magic_formula_report(const SampledSignal& f, const SampledSignal& g, std::span<const TFPoint> points,
                                 std::size_t keep) {
    const PropagatorSpec c = PropagatorSpec::chirp(1.0);
    const int dim = f.grid.dim;
    // Group by the x each side needs so every translated window is built once.
    std::vector<std::size_t> by_lhs(points.size()), by_rhs(points.size());
    for (std::size_t i = 0; i < points.size(); ++i)
        by_lhs[i] = by_rhs[i] = i;
    auto shifted = [&](std::size_t i) {
        return Vec2{points[i].x[0] - points[i].xi[0], points[i].x[1] - points[i].xi[1]};
    };
    std::sort(by_lhs.begin(), by_lhs.end(), [&](auto a, auto b) { return points[a].x < points[b].x; });
    std::sort(by_rhs.begin(), by_rhs.end(), [&](auto a, auto b) { return shifted(a) < shifted(b); });

    std::vector<PointResidual> all(points.size());
    StftEvaluator lhs(apply_propagator(c, f), apply_propagator(c, g));
    for (std::size_t i : by_lhs) {
        all[i].point = points[i];
        all[i].lhs = lhs(points[i].x, points[i].xi);
    }
    StftEvaluator rhs(f, g);
    for (std::size_t i : by_rhs) {
        const Vec2 w = points[i].xi;
        all[i].rhs = std::polar(1.0, -kPi * dot(w, w, dim)) * rhs(shifted(i), w);
        all[i].residual = std::abs(all[i].lhs - all[i].rhs) / (1.0 + std::abs(all[i].rhs));
    }

    MagicReport report;
    for (const auto& r : all)
        report.max_residual = std::max(report.max_residual, r.residual);
    std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) { return a.residual > b.residual; });
    all.resize(std::min(keep, all.size()));
    report.worst = std::move(all);
    return report;
}

double magic_formula_residual(const SampledSignal& f, const SampledSignal& g, std::span<const TFPoint> points) {
    return magic_formula_report(f, g, points, 0).max_residual;
}

double lattice_shear_check(const SampledSignal& f, const SampledSignal& g, int N, int K) {
    if (N <= 0 || K < 0)
        throw std::invalid_argument("lattice_shear_check needs N > 0 and K >= 0");
    if (f.grid.dim != 1)
        throw std::invalid_argument("lattice_shear_check is implemented for one-dimensional signals");
    const PropagatorSpec c = PropagatorSpec::chirp(1.0);
    const double step = 1.0 / N;
    TFLattice lhs_lat{step, step, -K, K, -K, K};
    TFLattice rhs_lat{step, step, -2 * K, 2 * K, -K, K};
    const TFGrid lhs = stft(apply_propagator(c, f), apply_propagator(c, g), lhs_lat);
    const TFGrid rhs = stft(f, g, rhs_lat);
    double worst = 0.0;
    for (int k = -K; k <= K; ++k)
        for (int n = -K; n <= K; ++n) {
            const double a = std::abs(lhs.values[static_cast<std::size_t>(k + K) * lhs_lat.xi_size() + (n + K)]);
            const double b =
                std::abs(rhs.values[static_cast<std::size_t>(k - n + 2 * K) * rhs_lat.xi_size() + (n + K)]);
            worst = std::max(worst, std::abs(a - b) / (1.0 + b));
        }
    return worst;
}

SampledSignal gabor_sum(const Block& b, const SampledSignal& g, double step) {
    if (g.grid.dim != 1 || b.dim != 1)
        throw std::invalid_argument("gabor_sum is implemented in one dimension");
    const GridSpec& gs = g.grid;
    auto multiple_of = [](double v, double unit) {
        const double r = v / unit;
        return std::abs(r - std::round(r)) < 1e-9;
    };
    if (!(step > 0.0) || !multiple_of(step, gs.h) || !multiple_of(step, gs.dual_step()))
        throw std::invalid_argument("gabor_sum step must be a multiple of h and 1/(Lh)");
    const Interval kw = b.k_window.axis(0), nw = b.n_window.axis(0);
    const int kc = (kw.lo + kw.hi) / 2, nc = (nw.lo + nw.hi) / 2;
    SampledSignal out(gs);
    for (int k = kw.lo; k <= kw.hi; ++k) {
        SampledSignal shifted;
        bool built = false;
        for (int n = nw.lo; n <= nw.hi; ++n) {
            const int ki[1] = {k}, ni[1] = {n};
            const cplx c = b.get(ki, ni);
            if (c == cplx{})
                continue;
            if (!built) {
                shifted = translate(g, Vec2{4.0 * (k - kc) * step, 0.0});
                built = true;
            }
            const SampledSignal atom = modulate(shifted, Vec2{(n - nc) * step, 0.0});
            for (std::size_t j = 0; j < out.samples.size(); ++j)
                out.samples[j] += c * atom.samples[j];
        }
    }
    return out;
}

TFLattice transport_lattice(const GridSpec& g, double xi_max) {
    TFLattice lat;
    lat.x_step = 0.25;
    lat.xi_step = 0.25;
    const int xc = static_cast<int>(std::floor(0.5 * g.period() / lat.x_step));
    lat.x_lo = -xc;
    lat.x_hi = xc - 1;
    const int fc = static_cast<int>(std::floor(xi_max / lat.xi_step));
    lat.xi_lo = -fc;
    lat.xi_hi = fc;
    return lat;
}

TransportReport norm_transport_demo(std::span<const SampledSignal> family, std::span<const double> scales,
                                    const ExponentQuad& quad, double s, const TFLattice& lattice) {
    if (family.size() != scales.size() || family.empty())
        throw std::invalid_argument("norm_transport_demo needs one scale per family member");
    TransportReport rep;
    rep.quad = quad;
    rep.s = s;
    rep.verdict = decide_schrodinger(1, quad, Number::approx(s));
    const PropagatorSpec prop = PropagatorSpec::free_schrodinger(1.0);
    for (std::size_t i = 0; i < family.size(); ++i) {
        const SampledSignal& f = family[i];
        const SampledSignal gw = gaussian(f.grid);
        const TFNorm src = wiener_amalgam_norm(f, gw, quad.p1, quad.q1, s, lattice);
        const TFNorm dst = wiener_amalgam_norm(apply_propagator(prop, f), gw, quad.p2, quad.q2, 0.0, lattice);
        if (!(src.value > 0.0))
            throw std::domain_error("norm_transport_demo: zero source norm");
        rep.samples.push_back({scales[i], src.value, dst.value, dst.value / src.value, std::max(src.tail, dst.tail)});
    }
    double lo = rep.samples[0].ratio, hi = lo;
    rep.min_step_growth = rep.samples.size() > 1 ? HUGE_VAL : 0.0;
    for (std::size_t i = 0; i < rep.samples.size(); ++i) {
        lo = std::min(lo, rep.samples[i].ratio);
        hi = std::max(hi, rep.samples[i].ratio);
        if (i > 0)
            rep.min_step_growth = std::min(rep.min_step_growth, rep.samples[i].ratio / rep.samples[i - 1].ratio);
    }
    rep.spread = hi / lo;
    return rep;
}

}  // namespace tfshear
