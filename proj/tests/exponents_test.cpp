// Copyright 2026 The tfshear Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>

#include "tfshear/exponents.hpp"

namespace tfshear {
namespace {

TEST(Exponent, ParseForms) {
    EXPECT_TRUE(Exponent::parse("inf").is_infinite());
    EXPECT_EQ(Exponent::parse("inf").value(), INFINITY);
    EXPECT_EQ(*Exponent::parse("3/2").recip().exact(), Rational(2, 3));
    EXPECT_EQ(*Exponent::parse("0.5").recip().exact(), Rational(2));
    EXPECT_EQ(Exponent::parse("2"), Exponent());
    EXPECT_DOUBLE_EQ(Exponent::parse("4").value(), 4.0);
}

TEST(Exponent, RejectsNonPositive) {
    for (const char* bad : {"0", "-1", "x", "", "-inf"})
        EXPECT_THROW(Exponent::parse(bad), std::invalid_argument) << bad;
    EXPECT_THROW(Exponent::from_recip(Number(-1)), std::invalid_argument);
}

TEST(Exponent, ToStringRoundTrips) {
    for (const char* t : {"inf", "1", "3/2", "1/2", "4"})
        EXPECT_EQ(Exponent::parse(Exponent::parse(t).to_string()), Exponent::parse(t)) << t;
}

TEST(ExponentQuad, ComputeAB) {
    // A = d(1/p2 - 1/q1), B = d(1/q2 - 1/p1)
    auto ab = compute_AB(1, ExponentQuad::parse("1", "2", "1", "2"));
    EXPECT_EQ(*ab.A.exact(), Rational(1, 2));
    EXPECT_EQ(*ab.B.exact(), Rational(-1, 2));
    ab = compute_AB(2, ExponentQuad::parse("2", "inf", "2", "1"));
    EXPECT_EQ(*ab.A.exact(), Rational(1));
    EXPECT_EQ(*ab.B.exact(), Rational(1));
    ab = compute_AB(3, ExponentQuad::parse("3/2", "3", "3", "3/2"));
    EXPECT_EQ(ab.A.sign(), 0);
    EXPECT_EQ(ab.B.sign(), 0);
}

TEST(Bracket, JapaneseBracket) {
    const int v[2] = {3, 4};
    EXPECT_DOUBLE_EQ(bracket(std::span<const int>(v)), std::sqrt(26.0));
    const double w[1] = {0.0};
    EXPECT_DOUBLE_EQ(bracket(std::span<const double>(w)), 1.0);
}

TEST(WeightSpec, TensorPowerAndSampled) {
    auto w = WeightSpec::frequency_power(1, 2.0);
    const int k[1] = {100}, n[1] = {3};
    EXPECT_DOUBLE_EQ(w(k, n), 10.0);
    EXPECT_TRUE(WeightSpec::unweighted(2).is_unit());

    auto t = WeightSpec::sampled(Box::cube(1, 1), Box::cube(1, 0), {1.0, 2.0, 3.0});
    const int k0[1] = {1}, n0[1] = {0}, kout[1] = {2};
    EXPECT_DOUBLE_EQ(t(k0, n0), 3.0);
    EXPECT_THROW(t(kout, n0), std::out_of_range);
    EXPECT_THROW(WeightSpec::sampled(Box::cube(1, 0), Box::cube(1, 0), {0.0}), std::invalid_argument);
}

}  // namespace
}  // namespace tfshear
