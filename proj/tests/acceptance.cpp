// Copyright 2026 The tfshear Authors
// SPDX-License-Identifier: Apache-2.0

// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "support.hpp"
#include "tfshear/decision.hpp"
#include "tfshear/gabor.hpp"
#include "tfshear/schrodinger.hpp"
#include "tfshear/shear.hpp"
#include "tfshear/sweep.hpp"

namespace tfshear {
namespace {

using Clock = std::chrono::steady_clock;
using testing::acceptance_signals;
using testing::random_block;
using testing::random_points;

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0, double d = 0.0) {
    char buf[256];
    std::snprintf(buf, sizeof buf, f, a, b, c, d);
    return buf;
}

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

Outcome magic_formula() {
    const auto t0 = Clock::now();
    const auto sigs = acceptance_signals();
    const auto pts = random_points(50, 4.0, 2026);
    double worst = 0.0;
    for (const auto& f : sigs)
        for (const auto& g : sigs)
            worst = std::max(worst, magic_formula_residual(f.signal, g.signal, pts));
    const double t = seconds_since(t0);
    return {worst <= 1e-6 && t < 10.0, fmt("max residual %.3g over 36 pairs x 50 points, %.2f s", worst, t)};
}

Outcome lattice_form() {
    const auto sigs = acceptance_signals();
    double worst = 0.0;
    for (const auto& f : sigs)
        for (const auto& g : sigs)
            worst = std::max(worst, lattice_shear_check(f.signal, g.signal, 8, 32));
    return {worst <= 1e-5, fmt("max residual %.3g at N=8, K=32", worst)};
}

Outcome dilation_conjugation() {
    double paths = 0.0, unitary = 0.0;
    for (const auto& [name, f] : acceptance_signals()) {
        for (double t0 : {1.0, 0.5}) {
            const auto spec = PropagatorSpec::free_schrodinger(t0);
            const auto a = apply_propagator(spec, f, PropagatorPath::direct);
            const auto b = apply_propagator(spec, f, PropagatorPath::dilation);
            paths = std::max(paths, testing::max_abs_diff(a.samples, b.samples));
            unitary = std::max(unitary, std::abs(a.l2_norm() - f.l2_norm()) / f.l2_norm());
            unitary = std::max(unitary, std::abs(b.l2_norm() - f.l2_norm()) / f.l2_norm());
        }
        const auto c = apply_propagator(PropagatorSpec::chirp(1.0), f);
        unitary = std::max(unitary, std::abs(c.l2_norm() - f.l2_norm()) / f.l2_norm());
    }
    return {paths <= 1e-8 && unitary <= 1e-10, fmt("path difference %.3g, unitarity %.3g", paths, unitary)};
}

Outcome fundamental_and_scaling() {
    const auto sigs = acceptance_signals();
    const auto pf = random_points(25, 4.0, 7), ps = random_points(25, 4.0, 8);
    double fid = 0.0, sc = 0.0;
    for (const auto& f : sigs)
        for (const auto& g : sigs) {
            fid = std::max(fid, check_fundamental_identity(f.signal, g.signal, pf));
            sc = std::max(sc, check_scaling(f.signal, g.signal, ps));
        }
    return {fid <= 1e-6 && sc <= 1e-6, fmt("fundamental identity %.3g, scaling %.3g", fid, sc)};
}

Outcome permutation_invariance() {
    std::mt19937_64 rng(5);
    double worst = 0.0;
    for (int t = 0; t < 1000; ++t) {
        const Block a = random_block(rng, 1 + t % 2, 6);
        const Block ta = shear_apply(a);
        const auto m = WeightSpec::unweighted(a.dim);
        for (const char* r : {"1/2", "1", "2", "inf"}) {
            const auto e = Exponent::parse(r);
            const double x = norm_l_paren_pq(ta, e, e, m), y = norm_l_paren_pq(a, e, e, m);
            worst = std::max(worst, std::abs(x - y) / y);
        }
    }
    return {worst <= 1e-12, fmt("max relative difference %.3g over 1000 blocks", worst)};
}

Outcome minkowski_bound() {
    struct Case {
        const char* q;
        const char* p;
        double s;
    };
    std::mt19937_64 rng(6);
    double worst = 0.0;
    for (const Case c : {Case{"1", "2", 0.0}, Case{"1", "2", 1.0}, Case{"1/2", "1", 0.5}, Case{"2", "inf", 0.0}}) {
        const auto p = Exponent::parse(c.p), q = Exponent::parse(c.q);
        for (int t = 0; t < 1000; ++t) {
            const Block a = random_block(rng, 1 + t % 2, 6);
            const auto m = WeightSpec::frequency_power(a.dim, c.s);
            const double lhs = norm_l_paren_pq(shear_apply(a), p, q, m);
            const double rhs = norm_l_paren_pq(a, q, p, m);
            worst = std::max(worst, (lhs - rhs) / rhs);
        }
    }
    return {worst <= 1e-10, fmt("max (lhs - rhs)/rhs %.3g over 4 x 1000 blocks", worst)};
}

Outcome diagonal_reduction() {
    const char* ex[] = {"1", "3/2", "2", "3", "inf"};
    const char* ss[] = {"-1", "0", "0.49", "0.5", "0.51", "1", "2"};
    int cases = 0, mismatches = 0;
    for (int d : {1, 2})
        for (auto p : ex)
            for (auto q : ex)
                for (auto s : ss) {
                    const Number sn = Number::parse(s);
                    const bool a = decide_shear(d, ExponentQuad::parse(p, q, p, q), sn).bounded;
                    // s >= d|1/p - 1/q|, strict iff p != q, evaluated here independently.
                    const Number gap = Number(d) * (Exponent::parse(p).recip() - Exponent::parse(q).recip());
                    const Number absgap = gap.sign() < 0 ? -gap : gap;
                    const bool b = std::string(p) == q ? sn >= absgap : sn > absgap;
                    mismatches += a != b || a != theoremA_check(d, Exponent::parse(p), Exponent::parse(q), sn);
                    ++cases;
                }
    return {cases == 350 && mismatches == 0, fmt("%.0f cases, %.0f mismatches", cases, mismatches)};
}

Outcome unweighted_reduction() {
    const char* ex[] = {"1/2", "1", "2", "4", "inf"};
    int cases = 0, mismatches = 0;
    for (auto p1 : ex)
        for (auto q1 : ex)
            for (auto p2 : ex)
                for (auto q2 : ex) {
                    const auto quad = ExponentQuad::parse(p1, q1, p2, q2);
                    mismatches += decide_unweighted(quad) != decide_shear(1, quad, Number(0)).bounded;
                    ++cases;
                }
    return {cases == 625 && mismatches == 0, fmt("%.0f cases, %.0f mismatches", cases, mismatches)};
}

Outcome witness_soundness() {
    const auto t0 = Clock::now();
    SweepConfig cfg;
    const auto grid = default_sweep_grid(1);
    const auto rows = run_sweep(cfg, grid);
    int bad = 0, grows = 0, stays = 0;
    double max_residual = 0.0;
    for (const auto& r : rows) {
        bad += !r.consistent;
        grows += r.check == SweepRow::Check::grows;
        stays += r.check == SweepRow::Check::stays_bounded;
        for (const auto& f : r.families)
            max_residual = std::max(max_residual, f.growth.fit.residual);
    }
    const double t = seconds_since(t0);
    const bool ok = rows.size() == 200 && bad == 0 && max_residual < 0.05 && t < 300.0;
    return {ok, fmt("%.0f tuples (%.0f growing, %.0f bounded with margin), %.0f inconsistent", static_cast<double>(rows.size()),
                    grows, stays, bad) +
                    fmt(", max fit residual %.3g, %.1f s", max_residual, t)};
}

Outcome box_slopes() {
    const char* ex[] = {"1/2", "1", "3/2", "2", "3", "inf"};
    std::mt19937_64 rng(10);
    std::uniform_int_distribution<int> pick(0, 5), quarter(0, 6);
    const int Ns[] = {32, 64, 128, 256, 512};
    double worst = 0.0, worst_res = 0.0;
    for (int t = 0; t < 20; ++t) {
        const auto quad = ExponentQuad::parse(ex[pick(rng)], ex[pick(rng)], ex[pick(rng)], ex[pick(rng)]);
        const double s = 0.25 * quarter(rng);
        const double predicted = (quad.p2.recip_value() + quad.q2.recip_value()) -
                                 (quad.p1.recip_value() + quad.q1.recip_value()) - s;
        const auto g = growth_slope(WitnessId::box, std::nullopt, 1, quad, s, Ns);
        worst = std::max(worst, std::abs(g.fit.slope - predicted));
        worst_res = std::max(worst_res, g.fit.residual);
    }
    return {worst <= 0.1, fmt("max |slope - prediction| %.3g over 20 tuples (max fit residual %.3g)", worst, worst_res)};
}

Outcome fractional_integral() {
    const double lambda = 1.0 / 3.0;
    const auto r1 = Exponent::parse("3/2"), r2 = Exponent::parse("3");
    auto ratio_of = [&](const Sequence& b) {
        const auto out = frac_integral_apply(b, lambda, 1);
        return lp_norm(out.value, r2) / lp_norm(b, r1);
    };
    std::vector<double> Ns, ratios;
    for (int N = 32; N <= 512; N *= 2) {
        Sequence b(Box::cube(1, N));
        std::fill(b.values.begin(), b.values.end(), 1.0);
        Ns.push_back(N);
        ratios.push_back(ratio_of(b));
    }
    const auto fit = fit_loglog(Ns, ratios);
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> width(32, 512);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    double worst = 0.0;
    for (int t = 0; t < 100; ++t) {
        Sequence b(Box::cube(1, width(rng)));
        for (auto& v : b.values)
            v = u(rng);
        worst = std::max(worst, ratio_of(b));
    }
    const bool ok = std::abs(fit.slope) < 0.05 && worst < 10.0 * ratios.front();
    return {ok, fmt("box slope %.4f (residual %.3g), random max ratio %.3f vs 10 x %.3f", fit.slope, fit.residual, worst,
                    ratios.front())};
}

Outcome gabor_frame() {
    const GridSpec g{1, 256, 1.0 / 16.0};
    const GaborSystem sys{gaussian(g), 4, 4};
    const auto fb = frame_bounds(sys);
    const GaborSystem dual{dual_window(sys), 4, 4};
    std::mt19937_64 rng(12);
    std::normal_distribution<double> nd;
    double recon = 0.0, adj = 0.0, norm_gap = 0.0;
    const auto two = Exponent::parse("2");
    for (int t = 0; t < 5; ++t) {
        const auto f = testing::random_signal(g, rng);
        for (const auto& r : {synthesis(dual, analysis(sys, f)), synthesis(sys, analysis(dual, f))}) {
            double e = 0.0;
            for (std::size_t i = 0; i < f.samples.size(); ++i)
                e += std::norm(r.samples[i] - f.samples[i]);
            recon = std::max(recon, std::sqrt(e * g.h) / f.l2_norm());
        }
        Block c(sys.k_window(), sys.n_window());
        for (auto& v : c.values)
            v = {nd(rng), nd(rng)};
        const Block cf = analysis(sys, f);
        cplx rhs = 0.0;
        for (std::size_t i = 0; i < c.values.size(); ++i)
            rhs += c.values[i] * std::conj(cf.values[i]);
        adj = std::max(adj, std::abs(inner(synthesis(sys, c), f) - rhs) / std::abs(rhs));
        // Outside [sqrt A - eps, sqrt B + eps] ||f|| counts as a gap; eps = 1e-9 ||f||.
        const double v = gabor_wiener_norm(sys, f, two, two, 0.0).value, fn = f.l2_norm();
        norm_gap = std::max({norm_gap, (std::sqrt(fb.A) * fn - v) / fn, (v - std::sqrt(fb.B) * fn) / fn});
    }
    const bool ok = fb.is_frame && recon <= 1e-10 && adj <= 1e-12 && norm_gap <= 1e-9;
    return {ok, fmt("A=%.6g B=%.6g, reconstruction %.3g, adjointness %.3g", fb.A, fb.B, recon, adj) +
                    fmt(", norm outside frame interval by %.3g", std::max(norm_gap, 0.0))};
}

Outcome moyal() {
    const auto lat = TFLattice::symmetric(1.0 / 8.0, 96, 1.0 / 8.0, 64);
    const auto two = Exponent::parse("2");
    const auto sigs = acceptance_signals();
    double moy = 0.0, unit = 0.0;
    for (const auto& f : sigs) {
        for (const auto& g : sigs) {
            const double v = wiener_amalgam_norm(f.signal, g.signal, two, two, 0.0, lat).value;
            const double expect = f.signal.l2_norm() * g.signal.l2_norm();
            moy = std::max(moy, std::abs(v - expect) / expect);
        }
        const auto F = fourier(f.signal);
        unit = std::max(unit, std::abs(F.energy() - f.signal.energy()) / f.signal.energy());
    }
    return {moy <= 1e-3 && unit <= 1e-10, fmt("Moyal relative error %.3g over 36 pairs, fourier unitarity %.3g", moy, unit)};
}

}  // namespace
}  // namespace tfshear

int main() {
    using namespace tfshear;
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
        {"magic formula", magic_formula},
        {"lattice form of the magic formula", lattice_form},
        {"dilation conjugation and unitarity", dilation_conjugation},
        {"fundamental and scaling identities", fundamental_and_scaling},
        {"shear permutation invariance", permutation_invariance},
        {"Minkowski bound for the shear", minkowski_bound},
        {"unweighted-diagonal reduction", diagonal_reduction},
        {"unweighted reduction", unweighted_reduction},
        {"witness soundness sweep", witness_soundness},
        {"box-family slope accuracy", box_slopes},
        {"fractional integral endpoint", fractional_integral},
        {"Gabor frame, dual window and norm", gabor_frame},
        {"Moyal and Plancherel", moyal},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failed += !o.pass;
        std::printf("criterion %zu: %s %s: %s\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first, o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%zu criteria, %d failed\n", criteria.size(), failed);
    return failed == 0 ? 0 : 1;
}
