// Copyright 2026 The tfshear Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <random>
#include <vector>

#include "support.hpp"
#include "tfshear/mixed_norm.hpp"

namespace tfshear {
namespace {

using testing::random_block;

// Naive evaluation straight from the definition, with plain pow() and no
// rescaling. Values are grouped by the outer index.
double naive(const Block& a, double inner_p, double outer_p, bool inner_is_n, double s) {
    std::map<std::vector<int>, std::vector<double>> groups;
    std::vector<int> k(static_cast<std::size_t>(a.dim)), n(k.size());
    const std::size_t nn = a.n_size();
    for (std::size_t i = 0; i < a.values.size(); ++i) {
        a.k_window.index(i / nn, k);
        a.n_window.index(i % nn, n);
        double w = std::pow(bracket(std::span<const int>(n)), s);
        groups[inner_is_n ? k : n].push_back(std::abs(a.values[i]) * w);
    }
    auto pnorm = [](const std::vector<double>& v, double p) {
        double acc = 0.0;
        for (double x : v)
            acc = std::isinf(p) ? std::max(acc, x) : acc + std::pow(x, p);
        return std::isinf(p) ? acc : std::pow(acc, 1.0 / p);
    };
    std::vector<double> outer;
    for (auto& [key, v] : groups)
        outer.push_back(pnorm(v, inner_p));
    return pnorm(outer, outer_p);
}

TEST(LpNorm, SmallCases) {
    const double v[3] = {3.0, 4.0, 0.0};
    EXPECT_DOUBLE_EQ(lp_norm(v, Exponent::parse("2")), 5.0);
    EXPECT_DOUBLE_EQ(lp_norm(v, Exponent::parse("1")), 7.0);
    EXPECT_DOUBLE_EQ(lp_norm(v, Exponent::infinity()), 4.0);
    EXPECT_NEAR(lp_norm(v, Exponent::parse("1/2")), std::pow(std::sqrt(3.0) + 2.0, 2.0), 1e-12);
    EXPECT_EQ(lp_norm(std::span<const double>(), Exponent::parse("1/2")), 0.0);
}

TEST(LpNorm, WeightedSequence) {
    Sequence b(Box::cube(1, 2));
    b.values = {1, 1, 1, 1, 1};
    // sum <n>^2 over |n| <= 2 = 5 + 2*(1+4) = 15
    EXPECT_NEAR(lp_norm_weighted(b, Exponent::parse("2"), 1.0), std::sqrt(15.0), 1e-14);
}

TEST(LpNorm, ScaledAccumulationSurvivesExtremes) {
    std::vector<double> tiny(1000000, 1e-200), huge(4, 1e300);
    EXPECT_NEAR(lp_norm(tiny, Exponent::parse("1/2")) / 1e-188, 1.0, 1e-9);
    EXPECT_NEAR(lp_norm(huge, Exponent::parse("2")) / 2e300, 1.0, 1e-14);
}

TEST(MixedNorm, OnesExample) {
    Block a(Box::cube(1, 2), Box::cube(1, 2));
    for (auto& v : a.values)
        v = 1.0;
    // sup over n is 1, sum over k is 5
    EXPECT_DOUBLE_EQ(norm_l_paren_pq(a, Exponent::parse("1"), Exponent::infinity(), WeightSpec::unweighted(1)),
                     5.0);
}

TEST(MixedNorm, TwoUnitEntries) {
    Block a(Box::cube(1, 1), Box::cube(1, 1));
    const int k0[1] = {-1}, n0[1] = {1}, k1[1] = {1}, n1[1] = {0};
    a.at(k0, n0) = 1.0;
    a.at(k1, n1) = 1.0;
    const auto two = Exponent::parse("2");
    EXPECT_NEAR(norm_lpq(a, two, two, WeightSpec::unweighted(1)), std::sqrt(2.0), 1e-15);
    EXPECT_NEAR(norm_l_paren_pq(a, two, two, WeightSpec::unweighted(1)), std::sqrt(2.0), 1e-15);
}

TEST(MixedNorm, MatchesNaiveOracle) {
    std::mt19937_64 rng(7);
    const char* exps[] = {"1/2", "1", "3/2", "2", "4", "inf"};
    for (int trial = 0; trial < 300; ++trial) {
        const int d = 1 + trial % 2;
        Block a = random_block(rng, d, d == 1 ? 7 : 3);
        const auto p = Exponent::parse(exps[trial % 6]);
        const auto q = Exponent::parse(exps[(trial / 6) % 6]);
        const double s = (trial % 5) * 0.5 - 0.5;
        const auto m = WeightSpec::frequency_power(d, s);
        EXPECT_NEAR(norm_l_paren_pq(a, p, q, m), naive(a, q.value(), p.value(), true, s),
                    1e-12 * naive(a, q.value(), p.value(), true, s));
        EXPECT_NEAR(norm_lpq(a, p, q, m), naive(a, p.value(), q.value(), false, s),
                    1e-12 * naive(a, p.value(), q.value(), false, s));
    }
}

TEST(MixedNorm, BoxGrowthAgainstBruteForce) {
    // a = 1 on |k| <= 2N, |n| <= N; exponent slope s + 1/q1 + 1/p1.
    const auto p = Exponent::parse("1"), q = Exponent::parse("2");
    const double s = 0.5;
    std::vector<double> logN, logv;
    for (int N : {32, 64, 128, 256}) {
        Block a(Box::cube(1, 2 * N), Box::cube(1, N));
        for (auto& v : a.values)
            v = 1.0;
        double v = norm_l_paren_pq(a, p, q, WeightSpec::frequency_power(1, s));
        if (N == 64) {
            double inner = 0.0;
            for (int n = -N; n <= N; ++n)
                inner += std::sqrt(1.0 + double(n) * n);  // <n>^{2s} with s = 1/2
            EXPECT_NEAR(v, (4 * N + 1) * std::sqrt(inner), 1e-9 * v);
        }
        logN.push_back(std::log(N));
        logv.push_back(std::log(v));
    }
    const double slope = (logv.back() - logv.front()) / (logN.back() - logN.front());
    EXPECT_NEAR(slope, s + 1.0 / 2.0 + 1.0, 0.02);
}

TEST(MixedNormProperties, Homogeneity) {
    std::mt19937_64 rng(11);
    for (const char* pe : {"1/2", "1", "2", "inf"})
        for (const char* qe : {"1/3", "1", "3", "inf"}) {
            Block a = random_block(rng, 1);
            Block b = a;
            const cplx lam(-2.5, 1.25);
            for (auto& v : b.values)
                v *= lam;
            const auto p = Exponent::parse(pe), q = Exponent::parse(qe);
            const auto m = WeightSpec::frequency_power(1, 0.7);
            const double na = norm_l_paren_pq(a, p, q, m);
            EXPECT_NEAR(norm_l_paren_pq(b, p, q, m), std::abs(lam) * na, 1e-12 * std::abs(lam) * na);
            const double ma = norm_lpq(a, p, q, m);
            EXPECT_NEAR(norm_lpq(b, p, q, m), std::abs(lam) * ma, 1e-12 * std::abs(lam) * ma);
        }
}

TEST(MixedNormProperties, Monotonicity) {
    std::mt19937_64 rng(12);
    std::uniform_real_distribution<double> shrink(0.0, 1.0);
    for (int t = 0; t < 100; ++t) {
        Block b = random_block(rng, 1 + t % 2, 4);
        Block a = b;
        for (auto& v : a.values)
            v *= shrink(rng);
        const auto p = Exponent::parse(t % 3 == 0 ? "1/2" : "3"), q = Exponent::parse(t % 2 ? "inf" : "1");
        const auto m = WeightSpec::frequency_power(a.dim, 1.0);
        EXPECT_LE(norm_l_paren_pq(a, p, q, m), norm_l_paren_pq(b, p, q, m) * (1 + 1e-14));
        EXPECT_LE(norm_lpq(a, p, q, m), norm_lpq(b, p, q, m) * (1 + 1e-14));
    }
}

TEST(MixedNormProperties, EqualExponentsCollapse) {
    std::mt19937_64 rng(13);
    for (int t = 0; t < 200; ++t) {
        Block a = random_block(rng, 1 + t % 2);
        const auto p = Exponent::parse(t % 4 == 0 ? "1/2" : t % 4 == 1 ? "1" : t % 4 == 2 ? "2" : "inf");
        const auto m = WeightSpec::frequency_power(a.dim, -0.5);
        const double x = norm_lpq(a, p, p, m), y = norm_l_paren_pq(a, p, p, m);
        EXPECT_NEAR(x, y, 1e-12 * y);
    }
}

TEST(MixedNormProperties, Nesting) {
    std::mt19937_64 rng(14);
    const auto m = WeightSpec::unweighted(1);
    const char* ladder[] = {"1/2", "1", "2", "4", "inf"};
    for (int t = 0; t < 100; ++t) {
        Block a = random_block(rng, 1);
        for (int i = 0; i + 1 < 5; ++i) {
            const auto lo = Exponent::parse(ladder[i]), hi = Exponent::parse(ladder[i + 1]);
            const auto q = Exponent::parse("3/2");
            EXPECT_GE(norm_l_paren_pq(a, lo, q, m) * (1 + 1e-14), norm_l_paren_pq(a, hi, q, m));
            EXPECT_GE(norm_l_paren_pq(a, q, lo, m) * (1 + 1e-14), norm_l_paren_pq(a, q, hi, m));
        }
    }
}

TEST(MixedNorm, ZeroBlockIsZero) {
    Block a(Box::cube(1, 3), Box::cube(1, 3));
    EXPECT_EQ(norm_l_paren_pq(a, Exponent::parse("1/2"), Exponent::parse("1/3"), WeightSpec::unweighted(1)), 0.0);
    EXPECT_EQ(norm_lpq(a, Exponent::parse("1/2"), Exponent::infinity(), WeightSpec::unweighted(1)), 0.0);
}

}  // namespace
}  // namespace tfshear
