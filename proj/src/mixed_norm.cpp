// Copyright 2026 The tfshear Authors
// SPDX-License-Identifier: Apache-2.0

#include "tfshear/mixed_norm.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace tfshear {

Block::Block(Box k, Box n) : dim(k.dim()), k_window(std::move(k)), n_window(std::move(n)) {
    if (k_window.dim() != n_window.dim())
        throw std::invalid_argument("block windows must share a dimension");
    values.assign(k_window.size() * n_window.size(), cplx{});
}

cplx Block::get(std::span<const int> k, std::span<const int> n) const {
    if (!k_window.contains(k) || !n_window.contains(n))
        return {};
    return values[k_window.offset(k) * n_size() + n_window.offset(n)];
}

cplx& Block::at(std::span<const int> k, std::span<const int> n) {
    if (!k_window.contains(k) || !n_window.contains(n))
        throw std::out_of_range("block index outside its window");
    return values[k_window.offset(k) * n_size() + n_window.offset(n)];
}

std::size_t Block::nonzeros() const {
    std::size_t c = 0;
    for (const auto& v : values)
        c += v != cplx{} ? 1 : 0;
    return c;
}

PowerSum::PowerSum(const Exponent& p) : p_(p.value()) {
    if (p.is_infinite())
        mode_ = Mode::inf;
    else if (p.recip() == Number(1))
        mode_ = Mode::one;
    else if (p.recip() == Number(Rational(1, 2)))
        mode_ = Mode::two;
    else if (p.recip() == Number(2))
        mode_ = Mode::half;
    else
        mode_ = Mode::general;
}

double PowerSum::rel(double r) const {
    switch (mode_) {
        case Mode::one: return r;
        case Mode::two: return r * r;
        case Mode::half: return std::sqrt(r);
        default: return std::pow(r, p_);
    }
}

void PowerSum::add(double x) {
    if (!(x > 0.0)) {
        if (std::isnan(x))
            sum_ = scale_ = std::numeric_limits<double>::quiet_NaN();
        return;
    }
    if (mode_ == Mode::inf) {
        if (x > scale_)
            scale_ = x;
        return;
    }
    if (x <= scale_) {
        sum_ += rel(x / scale_);
    } else {
        sum_ = (scale_ > 0.0 ? sum_ * rel(scale_ / x) : 0.0) + 1.0;
        scale_ = x;
    }
}

double PowerSum::result() const {
    if (mode_ == Mode::inf || scale_ == 0.0)
        return scale_;
    switch (mode_) {
        case Mode::one: return scale_ * sum_;
        case Mode::two: return scale_ * std::sqrt(sum_);
        case Mode::half: return scale_ * sum_ * sum_;
        default: return scale_ * std::pow(sum_, 1.0 / p_);
    }
}

double lp_norm(std::span<const double> magnitudes, const Exponent& p) {
    PowerSum acc(p);
    for (double v : magnitudes)
        acc.add(std::abs(v));
    return acc.result();
}

double lp_norm(const Sequence& b, const Exponent& p) { return lp_norm(b.values, p); }

double lp_norm_weighted(const Sequence& b, const Exponent& p, double s) {
    PowerSum acc(p);
    std::vector<int> idx(static_cast<std::size_t>(b.window.dim()));
    for (std::size_t i = 0; i < b.values.size(); ++i) {
        if (b.values[i] == 0.0)
            continue;
        b.window.index(i, idx);
        acc.add(std::abs(b.values[i]) * std::pow(bracket(std::span<const int>(idx)), s));
    }
    return acc.result();
}

namespace {

// m(k, n) on the block's windows: separable factors for tensor weights,
// a dense table for sampled ones.
struct WeightGrid {
    bool unit = true;
    bool dense = false;
    std::vector<double> wk, wn, full;

    double operator()(std::size_t i, std::size_t j, std::size_t n_size) const {
        if (unit)
            return 1.0;
        if (dense)
            return full[i * n_size + j];
        return wk[i] * wn[j];
    }
};

std::vector<double> axis_factor(const Box& box, double s) {
    std::vector<double> f(box.size(), 1.0);
    if (s == 0.0)
        return f;
    std::vector<int> idx(static_cast<std::size_t>(box.dim()));
    for (std::size_t i = 0; i < f.size(); ++i) {
        box.index(i, idx);
        f[i] = std::pow(bracket(std::span<const int>(idx)), s);
    }
    return f;
}

WeightGrid make_weight_grid(const Block& a, const WeightSpec& m) {
    if (m.dim() != a.dim)
        throw std::invalid_argument("weight dimension does not match block dimension");
    WeightGrid g;
    if (m.is_unit())
        return g;
    g.unit = false;
    if (m.kind() == WeightSpec::Kind::tensor_power) {
        g.wk = axis_factor(a.k_window, m.s1());
        g.wn = axis_factor(a.n_window, m.s2());
        return g;
    }
    g.dense = true;
    g.full.resize(a.values.size());
    std::vector<int> k(static_cast<std::size_t>(a.dim)), n(static_cast<std::size_t>(a.dim));
    const std::size_t ns = a.n_size();
    for (std::size_t i = 0; i < a.k_size(); ++i) {
        a.k_window.index(i, k);
        for (std::size_t j = 0; j < ns; ++j) {
            // Outside the table only zero entries are tolerated.
            if (a.values[i * ns + j] == cplx{}) {
                g.full[i * ns + j] = 1.0;
                continue;
            }
            a.n_window.index(j, n);
            g.full[i * ns + j] = m(k, n);
        }
    }
    return g;
}

}  // namespace

double norm_lpq(const Block& a, const Exponent& p, const Exponent& q, const WeightSpec& m) {
    if (a.values.empty())
        return 0.0;
    const WeightGrid w = make_weight_grid(a, m);
    const std::size_t ks = a.k_size(), ns = a.n_size();
    std::vector<PowerSum> inner(ns, PowerSum(p));
    for (std::size_t i = 0; i < ks; ++i) {
        const cplx* row = a.values.data() + i * ns;
        for (std::size_t j = 0; j < ns; ++j) {
            if (row[j] == cplx{})
                continue;
            inner[j].add(magnitude(row[j]) * w(i, j, ns));
        }
    }
    PowerSum outer(q);
    for (const auto& acc : inner)
        outer.add(acc.result());
    return outer.result();
}

double norm_l_paren_pq(const Block& a, const Exponent& p, const Exponent& q, const WeightSpec& m) {
    if (a.values.empty())
        return 0.0;
    const WeightGrid w = make_weight_grid(a, m);
    const std::size_t ks = a.k_size(), ns = a.n_size();
    PowerSum outer(p);
    for (std::size_t i = 0; i < ks; ++i) {
        const cplx* row = a.values.data() + i * ns;
        PowerSum inner(q);
        for (std::size_t j = 0; j < ns; ++j) {
            if (row[j] == cplx{})
                continue;
            inner.add(magnitude(row[j]) * w(i, j, ns));
        }
        outer.add(inner.result());
    }
    return outer.result();
}

}  // namespace tfshear
