// Copyright 2026 The tfshear Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tfshear/lattice.hpp"
#include "tfshear/number.hpp"

namespace tfshear {

/// An extended exponent p in (0, inf], stored through its reciprocal so that
/// p = inf is the ordinary value recip = 0.
class Exponent {
public:
    /// p = 2.
    Exponent() : recip_(Rational(1, 2)) {}

    /// Throws std::invalid_argument unless recip is finite and >= 0.
    static Exponent from_recip(Number recip);
    /// Throws std::invalid_argument unless p > 0.
    static Exponent from_value(Number p);
    static Exponent from_value(double p);
    static Exponent infinity() { return from_recip(Number(0)); }

    /// Accepts "inf", a decimal ("1.5") or a fraction ("3/2").
    static Exponent parse(std::string_view text);

    const Number& recip() const { return recip_; }
    double recip_value() const { return recip_.value(); }
    /// +inf for p = inf.
    double value() const;
    bool is_infinite() const { return recip_.sign() == 0; }

    /// Round-trips through parse().
    std::string to_string() const;

    friend bool operator==(const Exponent& a, const Exponent& b) { return a.recip_ == b.recip_; }

private:
    explicit Exponent(Number recip) : recip_(std::move(recip)) {}
    Number recip_;
};

struct ExponentQuad {
    Exponent p1, q1, p2, q2;

    /// Accepts the four exponents in the order p1 q1 p2 q2.
    static ExponentQuad parse(std::string_view p1, std::string_view q1, std::string_view p2,
                              std::string_view q2);
    std::string to_string() const;
};

struct AB {
    Number A;
    Number B;
};

/// A = d(1/p2 - 1/q1), B = d(1/q2 - 1/p1).
AB compute_AB(int d, const ExponentQuad& quad);

/// <v> = (1 + |v|^2)^(1/2).
double bracket(std::span<const int> v);
double bracket(std::span<const double> v);

/// Weight m(k, n) on Z^d x Z^d: either the tensor power weight
/// <k>^s1 <n>^s2 or a table sampled over an index window.
///
/// The frequency weight v_s is the Japanese bracket power <n>^s. Some texts
/// write (1 + |n|)^(s/2) instead; both conventions define the same weighted
/// spaces up to equivalent norms, and the bracket form is the one every norm
/// computation here uses.
class WeightSpec {
public:
    enum class Kind { tensor_power, sampled };

    /// m = 1.
    static WeightSpec unweighted(int dim) { return tensor_power(dim, 0.0, 0.0); }
    static WeightSpec tensor_power(int dim, double s1, double s2);
    /// 1 (x) v_s.
    static WeightSpec frequency_power(int dim, double s) { return tensor_power(dim, 0.0, s); }
    /// Table laid out like a Block over k_window x n_window; entries must be > 0.
    static WeightSpec sampled(Box k_window, Box n_window, std::vector<double> table);

    Kind kind() const { return kind_; }
    int dim() const { return dim_; }
    double s1() const { return s1_; }
    double s2() const { return s2_; }
    bool is_unit() const { return kind_ == Kind::tensor_power && s1_ == 0.0 && s2_ == 0.0; }
    const Box& k_window() const { return k_window_; }
    const Box& n_window() const { return n_window_; }
    const std::vector<double>& table() const { return table_; }

    /// Throws std::out_of_range for sampled weights queried outside the table.
    double operator()(std::span<const int> k, std::span<const int> n) const;
    /// Tensor-power weights only.
    double at(std::span<const double> x, std::span<const double> xi) const;

private:
    Kind kind_ = Kind::tensor_power;
    int dim_ = 1;
    double s1_ = 0.0;
    double s2_ = 0.0;
    Box k_window_;
    Box n_window_;
    std::vector<double> table_;
};

/// Free-function spelling of WeightSpec::operator().
inline double weight_eval(const WeightSpec& w, std::span<const int> k, std::span<const int> n) {
    return w(k, n);
}

}  // namespace tfshear
