// Copyright 2026 The tfshear Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace tfshear {

/// Reduced fraction with a positive denominator. Arithmetic reports overflow
/// through std::nullopt instead of wrapping.
class Rational {
public:
    constexpr Rational() = default;

    /// Throws std::invalid_argument on a zero denominator.
    Rational(std::int64_t num, std::int64_t den = 1);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }
    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    static std::optional<Rational> add(const Rational& a, const Rational& b);
    static std::optional<Rational> mul(const Rational& a, const Rational& b);
    static std::optional<Rational> div(const Rational& a, const Rational& b);
    static int compare(const Rational& a, const Rational& b);

    Rational operator-() const { return Rational(-num_, den_); }
    friend bool operator==(const Rational&, const Rational&) = default;

    std::string to_string() const;

private:
    friend struct RationalAccess;
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

/// A real number that stays an exact fraction for as long as its inputs were
/// exact and no operation overflowed. Comparisons are exact between two exact
/// values and use an absolute tolerance of 1e-12 otherwise.
class Number {
public:
    static constexpr double kTolerance = 1e-12;

    Number() : Number(Rational(0)) {}
    Number(Rational r) : value_(r.to_double()), exact_(r) {}
    Number(int v) : Number(Rational(v)) {}

    /// An inexact value; never promoted to a fraction.
    static Number approx(double v);

    /// Decimal ("0.49", "-1", "2.5e-1") or fraction ("3/2"). Finite decimals
    /// are stored exactly when they fit in 64-bit fractions.
    static Number parse(std::string_view text);

    double value() const { return value_; }
    bool is_exact() const { return exact_.has_value(); }
    const std::optional<Rational>& exact() const { return exact_; }

    Number operator-() const;
    friend Number operator+(const Number& a, const Number& b);
    friend Number operator-(const Number& a, const Number& b);
    friend Number operator*(const Number& a, const Number& b);
    friend Number operator/(const Number& a, const Number& b);

    /// -1, 0 or 1.
    friend int compare(const Number& a, const Number& b);
    friend bool operator==(const Number& a, const Number& b) { return compare(a, b) == 0; }
    friend bool operator<(const Number& a, const Number& b) { return compare(a, b) < 0; }
    friend bool operator<=(const Number& a, const Number& b) { return compare(a, b) <= 0; }
    friend bool operator>(const Number& a, const Number& b) { return compare(a, b) > 0; }
    friend bool operator>=(const Number& a, const Number& b) { return compare(a, b) >= 0; }

    int sign() const { return compare(*this, Number(0)); }

    /// Shortest text that parses back to the same value.
    std::string to_string() const;

private:
    double value_ = 0.0;
    std::optional<Rational> exact_;
};

Number max(const Number& a, const Number& b);
Number min(const Number& a, const Number& b);

}  // namespace tfshear
