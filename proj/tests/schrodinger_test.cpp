// Copyright 2026 The tfshear Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "support.hpp"
#include "tfshear/schrodinger.hpp"

namespace tfshear {
namespace {

using std::numbers::pi;
using testing::acceptance_grid;
using testing::acceptance_signals;
using testing::max_abs_diff;
using testing::random_points;

TEST(PropagatorSpec, SymbolsAndText) {
    EXPECT_LT(std::abs(PropagatorSpec::chirp(1.0).symbol(0.25) - std::polar(1.0, -pi * 0.25)), 1e-15);
    EXPECT_LT(std::abs(PropagatorSpec::free_schrodinger(1.0).symbol(0.25) - std::polar(1.0, -pi)), 1e-15);
    for (auto spec : {PropagatorSpec::chirp(0.5), PropagatorSpec::free_schrodinger(-2.0)}) {
        auto back = PropagatorSpec::parse(spec.to_string());
        EXPECT_EQ(back.kind, spec.kind);
        EXPECT_EQ(back.t, spec.t);
    }
    EXPECT_THROW(PropagatorSpec::parse("heat:1"), std::invalid_argument);
    EXPECT_THROW(PropagatorSpec::parse("chirp:x"), std::invalid_argument);
}

TEST(Propagator, ChirpZeroIsIdentity) {
    auto f = bandlimited_noise(acceptance_grid(), 1);
    EXPECT_EQ(apply_propagator(PropagatorSpec::chirp(0.0), f).samples, f.samples);
}

TEST(Propagator, Unitarity) {
    for (const auto& [name, f] : acceptance_signals())
        for (auto spec : {PropagatorSpec::chirp(1.0), PropagatorSpec::chirp(-0.3), PropagatorSpec::free_schrodinger(1.0),
                          PropagatorSpec::free_schrodinger(0.5)}) {
            auto u = apply_propagator(spec, f);
            EXPECT_NEAR(u.l2_norm(), f.l2_norm(), 1e-12) << name << " " << spec.to_string();
        }
}

TEST(Propagator, GroupLaw) {
    auto f = bandlimited_noise(acceptance_grid(), 2);
    auto a = apply_propagator(PropagatorSpec::chirp(0.7), apply_propagator(PropagatorSpec::chirp(0.4), f));
    auto b = apply_propagator(PropagatorSpec::chirp(1.1), f);
    EXPECT_LT(max_abs_diff(a.samples, b.samples), 1e-10);
    // free_schrodinger(t) = chirp(4t)
    auto c = apply_propagator(PropagatorSpec::free_schrodinger(0.25), f);
    auto d = apply_propagator(PropagatorSpec::chirp(1.0), f);
    EXPECT_LT(max_abs_diff(c.samples, d.samples), 1e-12);
}

TEST(Propagator, GaussianAgainstClosedForm) {
    // chirp(t) e^{-pi x^2} = (1 + i t)^{-1/2} e^{-pi x^2 / (1 + i t)}
    const auto g = acceptance_grid();
    const double t = 0.8;
    auto u = apply_propagator(PropagatorSpec::chirp(t), gaussian(g));
    const cplx z(1.0, t);
    double err = 0.0;
    for (int j = 0; j < g.L; ++j) {
        const double x = g.coord(j);
        err = std::max(err, std::abs(u.samples[static_cast<std::size_t>(j)] - std::exp(-pi * x * x / z) / std::sqrt(z)));
    }
    EXPECT_LT(err, 1e-10);
}

TEST(Propagator, DilationPathAgrees) {
    for (const auto& [name, f] : acceptance_signals())
        for (double t0 : {1.0, 0.5}) {
            auto spec = PropagatorSpec::free_schrodinger(t0);
            auto a = apply_propagator(spec, f, PropagatorPath::direct);
            auto b = apply_propagator(spec, f, PropagatorPath::dilation);
            EXPECT_LT(max_abs_diff(a.samples, b.samples), 1e-8) << name << " t0=" << t0;
        }
}

TEST(MagicFormula, GaussianPair) {
    const auto g = acceptance_grid();
    auto f = gaussian(g);
    EXPECT_LT(magic_formula_residual(f, f, random_points(50, 4.0, 1)), 1e-6);
}

TEST(MagicFormula, ZeroFrequencyRow) {
    const auto g = acceptance_grid();
    auto f = gaussian(g);
    std::vector<TFPoint> row;
    for (int i = -8; i <= 8; ++i)
        row.push_back({{0.5 * i, 0.0}, {0.0, 0.0}});
    EXPECT_LT(magic_formula_residual(f, f, row), 1e-8);
}

TEST(MagicFormula, NoiseAgainstGaussian) {
    const auto g = acceptance_grid();
    auto rep = magic_formula_report(bandlimited_noise(g, 3), gaussian(g), random_points(50, 4.0, 2), 3);
    EXPECT_LT(rep.max_residual, 1e-5);
    ASSERT_EQ(rep.worst.size(), 3u);
    EXPECT_EQ(rep.worst.front().residual, rep.max_residual);
    EXPECT_GE(rep.worst[0].residual, rep.worst[1].residual);
}

TEST(MagicFormula, IndependentOracleAtOnePoint) {
    // V_{cg}(cf)(x, w) by direct quadrature of closed-form chirped Gaussians.
    const auto g = acceptance_grid();
    auto f = gaussian(g);
    const cplx z(1.0, 1.0);
    auto cg = [&](double t) { return std::exp(-pi * t * t / z) / std::sqrt(z); };
    const double x = 0.75, w = -0.5;
    cplx lhs = 0.0;
    for (int j = 0; j < g.L; ++j) {
        const double t = g.coord(j);
        lhs += cg(t) * std::conj(cg(t - x)) * std::polar(1.0, -2 * pi * w * t);
    }
    lhs *= g.h;
    const double xs = x - w;
    const cplx rhs = std::polar(1.0, -pi * w * w) * std::sqrt(0.5) * std::exp(-pi * (xs * xs + w * w) / 2) *
                     std::polar(1.0, -pi * xs * w);
    EXPECT_LT(std::abs(lhs - rhs), 1e-10);
    auto rep = magic_formula_report(f, f, std::vector<TFPoint>{{{x, 0}, {w, 0}}}, 1);
    EXPECT_LT(std::abs(rep.worst.front().lhs - lhs), 1e-10);
}

TEST(LatticeShear, GaussianAndHermite) {
    const auto g = acceptance_grid();
    EXPECT_LT(lattice_shear_check(gaussian(g), gaussian(g), 8, 32), 1e-6);
    EXPECT_LT(lattice_shear_check(hermite(g, 1), hermite(g, 1), 8, 32), 1e-5);
}

TEST(GaborSum, SingleAtomIsShiftedWindow) {
    const GridSpec g{1, 1024, 1.0 / 32.0};
    auto w = gaussian(g);
    Block b(Box({Interval{-1, 1}}), Box({Interval{-1, 1}}));
    const int k[1] = {1}, n[1] = {-1};
    b.at(k, n) = 1.0;
    auto s = gabor_sum(b, w, 0.5);
    auto expect = tf_shift(w, {4 * 0.5, 0}, {-0.5, 0});
    EXPECT_LT(max_abs_diff(s.samples, expect.samples), 1e-12);
    EXPECT_THROW(gabor_sum(b, w, 0.3), std::invalid_argument);
}

TEST(GaborSum, FreePropagatorShearsPackets) {
    // e^{i Delta} moves a packet at (x, xi) to about (x + 4 xi, xi).
    const GridSpec g{1, 2048, 1.0 / 16.0};
    auto w = gaussian(g, 0.5);
    Block b(Box({Interval{0, 0}}), Box({Interval{-1, 1}}));
    const int k[1] = {0}, n[1] = {1};
    b.at(k, n) = 1.0;
    auto f = gabor_sum(b, w, 1.0);
    auto u = apply_propagator(PropagatorSpec::free_schrodinger(1.0), f);
    double mean = 0.0, mass = 0.0;
    for (int j = 0; j < g.L; ++j) {
        const double m = std::norm(u.samples[static_cast<std::size_t>(j)]);
        mean += m * g.coord(j);
        mass += m;
    }
    EXPECT_NEAR(mean / mass, 4.0, 1e-6);
}

TEST(Transport, UnweightedL2IsConserved) {
    const GridSpec g{1, 4096, 1.0 / 32.0};
    std::vector<SampledSignal> fam;
    const std::vector<double> widths{0.5, 0.75, 1.0, 1.5, 2.0, 3.0};
    for (double w : widths)
        fam.push_back(gaussian(g, w));
    auto rep = norm_transport_demo(fam, widths, ExponentQuad::parse("2", "2", "2", "2"), 0.0, transport_lattice(g, 6.0));
    EXPECT_TRUE(rep.verdict.bounded);
    EXPECT_LT(rep.spread, 1.05);
}

std::vector<SampledSignal> witness_family(const GridSpec& g, const ExponentQuad& quad, const std::vector<int>& Ns) {
    auto v = decide_schrodinger(1, quad, Number(0));
    const WitnessId id = v.witness_hint.value_or(WitnessId::column_delta);
    const auto prof = v.hint_profile ? v.hint_profile : std::optional<Profile>(Profile::ones());
    std::vector<SampledSignal> fam;
    for (int N : Ns)
        fam.push_back(gabor_sum(make_witness({id, prof, N}, 1), gaussian(g), 0.5));
    return fam;
}

TEST(Transport, UnboundedWitnessGrowsPerDoubling) {
    const GridSpec g{1, 4096, 1.0 / 32.0};
    const auto quad = ExponentQuad::parse("1", "2", "1", "2");
    const std::vector<int> Ns{4, 8, 16};
    auto fam = witness_family(g, quad, Ns);
    const std::vector<double> scales(Ns.begin(), Ns.end());
    auto rep = norm_transport_demo(fam, scales, quad, 0.0, transport_lattice(g, 12.0));
    EXPECT_FALSE(rep.verdict.bounded);
    EXPECT_GT(rep.min_step_growth, 1.2);
    // Target growth factor per doubling.
    EXPECT_GE(rep.min_step_growth, 1.5);
}

TEST(Transport, UnweightedBoundedCaseStaysBounded) {
    const GridSpec g{1, 4096, 1.0 / 32.0};
    const std::vector<int> Ns{4, 8, 16};
    auto fam = witness_family(g, ExponentQuad::parse("1", "2", "1", "2"), Ns);
    const std::vector<double> scales(Ns.begin(), Ns.end());
    const auto quad = ExponentQuad::parse("1", "2", "2", "1");
    auto rep = norm_transport_demo(fam, scales, quad, 0.0, transport_lattice(g, 12.0));
    EXPECT_TRUE(rep.verdict.bounded);
    EXPECT_LT(rep.spread, 1.2);
}

}  // namespace
}  // namespace tfshear
