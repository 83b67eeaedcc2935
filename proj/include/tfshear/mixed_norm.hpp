// Copyright 2026 The tfshear Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <complex>
#include <span>
#include <vector>

#include "tfshear/exponents.hpp"
#include "tfshear/lattice.hpp"

namespace tfshear {

using cplx = std::complex<double>;

/// |z| without the overflow guards of std::abs; entries here stay far from
/// the double range limits.
inline double magnitude(cplx z) { return std::sqrt(z.real() * z.real() + z.imag() * z.imag()); }

/// Finitely supported sequence a_{k,n} on Z^d x Z^d, zero outside
/// k_window x n_window. Storage is k-major: values[k_off * n_size + n_off].
struct Block {
    int dim = 1;
    Box k_window;
    Box n_window;
    std::vector<cplx> values;

    Block() = default;
    /// Zero-filled.
    Block(Box k, Box n);

    std::size_t k_size() const { return k_window.size(); }
    std::size_t n_size() const { return n_window.size(); }

    /// Zero outside the window.
    cplx get(std::span<const int> k, std::span<const int> n) const;
    /// Throws std::out_of_range outside the window.
    cplx& at(std::span<const int> k, std::span<const int> n);

    std::size_t nonzeros() const;
};

/// Finitely supported sequence on Z^d.
struct Sequence {
    Box window;
    std::vector<double> values;

    Sequence() = default;
    explicit Sequence(Box w) : window(std::move(w)), values(window.size(), 0.0) {}
};

/// Incremental (sum |x_i|^p)^(1/p), or max |x_i| for p = inf. Each partial sum
/// is kept relative to the largest magnitude seen so far, so p < 1 on large
/// inputs neither overflows nor underflows.
class PowerSum {
public:
    explicit PowerSum(const Exponent& p);

    void add(double magnitude);
    double result() const;

private:
    enum class Mode { inf, one, two, half, general };
    double rel(double r) const;

    Mode mode_;
    double p_;
    double scale_ = 0.0;
    double sum_ = 0.0;
};

/// (sum_i |x_i|^p)^(1/p).
double lp_norm(std::span<const double> magnitudes, const Exponent& p);
double lp_norm(const Sequence& b, const Exponent& p);
/// ||b * <n>^s||_p.
double lp_norm_weighted(const Sequence& b, const Exponent& p, double s);

/// (sum_n (sum_k |a_{k,n}|^p m^p)^(q/p))^(1/q): inner index k, outer n.
double norm_lpq(const Block& a, const Exponent& p, const Exponent& q, const WeightSpec& m);
/// (sum_k (sum_n |a_{k,n}|^q m^q)^(p/q))^(1/p): inner index n, outer k.
double norm_l_paren_pq(const Block& a, const Exponent& p, const Exponent& q, const WeightSpec& m);

}  // namespace tfshear
