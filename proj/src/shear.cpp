// Copyright 2026 The tfshear Authors
// SPDX-License-Identifier: Apache-2.0

#include "tfshear/shear.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace tfshear {

namespace {

std::vector<std::size_t> strides(const Box& box) {
    std::vector<std::size_t> st(static_cast<std::size_t>(box.dim()), 1);
    for (int a = box.dim() - 1; a > 0; --a)
        st[static_cast<std::size_t>(a - 1)] = st[static_cast<std::size_t>(a)] * box.axis(a).size();
    return st;
}

Box point_box(int d) { return Box::uniform(d, 0, 0); }

Box negate(const Box& b) {
    std::vector<Interval> axes;
    for (const auto& a : b.axes())
        axes.push_back({-a.hi, -a.lo});
    return Box(std::move(axes));
}

}  // namespace

Block shear_apply(const Block& a) {
    Block out(a.k_window + a.n_window, a.n_window);
    const std::size_t ks = a.k_size(), ns = a.n_size();
    if (ks == 0 || ns == 0)
        return out;
    if (a.dim == 1) {
        for (std::size_t i = 0; i < ks; ++i)
            for (std::size_t j = 0; j < ns; ++j)
                out.values[(i + j) * ns + j] = a.values[i * ns + j];
        return out;
    }
    const std::size_t d = static_cast<std::size_t>(a.dim);
    std::vector<int> k(d), n(d), kk(d);
    for (std::size_t i = 0; i < ks; ++i) {
        a.k_window.index(i, k);
        for (std::size_t j = 0; j < ns; ++j) {
            const cplx v = a.values[i * ns + j];
            if (v == cplx{})
                continue;
            a.n_window.index(j, n);
            for (std::size_t x = 0; x < d; ++x)
                kk[x] = k[x] + n[x];
            out.values[out.k_window.offset(kk) * ns + j] = v;
        }
    }
    return out;
}

Block shear_inverse(const Block& b, const std::optional<Box>& k_window) {
    Block out(k_window ? *k_window : b.k_window - b.n_window, b.n_window);
    if (out.k_window.dim() != b.dim)
        throw std::invalid_argument("target window dimension mismatch");
    const std::size_t ks = out.k_size(), ns = out.n_size();
    if (ks == 0 || ns == 0)
        return out;
    if (b.dim == 1) {
        const Interval src = b.k_window.axis(0);
        const int klo = out.k_window.axis(0).lo, nlo = b.n_window.axis(0).lo;
        for (std::size_t i = 0; i < ks; ++i)
            for (std::size_t j = 0; j < ns; ++j) {
                const int kk = klo + static_cast<int>(i) + nlo + static_cast<int>(j);
                if (src.contains(kk))
                    out.values[i * ns + j] =
                        b.values[static_cast<std::size_t>(kk - src.lo) * ns + j];
            }
        return out;
    }
    const std::size_t d = static_cast<std::size_t>(b.dim);
    std::vector<int> k(d), n(d), kk(d);
    for (std::size_t i = 0; i < ks; ++i) {
        out.k_window.index(i, k);
        for (std::size_t j = 0; j < ns; ++j) {
            b.n_window.index(j, n);
            for (std::size_t x = 0; x < d; ++x)
                kk[x] = k[x] + n[x];
            if (b.k_window.contains(kk))
                out.values[i * ns + j] = b.values[b.k_window.offset(kk) * ns + j];
        }
    }
    return out;
}

std::string to_string(WitnessId id) {
    switch (id) {
        case WitnessId::row_delta: return "row_delta";
        case WitnessId::column_delta: return "column_delta";
        case WitnessId::antidiagonal: return "antidiagonal";
        case WitnessId::box: return "box";
        case WitnessId::row_profile_box: return "row_profile_box";
    }
    return "?";
}

WitnessId parse_witness_id(std::string_view name) {
    for (WitnessId id : {WitnessId::row_delta, WitnessId::column_delta, WitnessId::antidiagonal,
                         WitnessId::box, WitnessId::row_profile_box})
        if (to_string(id) == name)
            return id;
    throw std::invalid_argument("unknown witness family '" + std::string(name) + "'");
}

bool requires_profile(WitnessId id) { return id != WitnessId::box; }

Sequence Profile::realize(int d, int N) const {
    if (kind == Kind::custom)
        return values;
    Sequence b(Box::cube(d, N));
    switch (kind) {
        case Kind::ones:
            std::fill(b.values.begin(), b.values.end(), 1.0);
            break;
        case Kind::point: {
            std::vector<int> idx(static_cast<std::size_t>(d), 0);
            idx[0] = N;
            b.values[b.window.offset(idx)] = 1.0;
            break;
        }
        case Kind::power: {
            std::vector<int> idx(static_cast<std::size_t>(d));
            for (std::size_t i = 0; i < b.values.size(); ++i) {
                b.window.index(i, idx);
                b.values[i] = std::pow(bracket(std::span<const int>(idx)), exponent);
            }
            break;
        }
        case Kind::custom:
            break;
    }
    return b;
}

std::string Profile::to_string() const {
    switch (kind) {
        case Kind::ones: return "ones";
        case Kind::point: return "point";
        case Kind::power: {
            char buf[48];
            std::snprintf(buf, sizeof buf, "power(%.17g)", exponent);
            return buf;
        }
        case Kind::custom: return "custom";
    }
    return "?";
}

Block make_witness(const WitnessFamily& f, int d) {
    if (d <= 0)
        throw std::invalid_argument("dimension must be positive");
    if (f.N < 0)
        throw std::invalid_argument("witness scale must be nonnegative");
    if (requires_profile(f.id) && !f.profile)
        throw std::invalid_argument("witness family " + to_string(f.id) + " needs a profile");
    if (f.id == WitnessId::box) {
        Block a(Box::cube(d, 2 * f.N), Box::cube(d, f.N));
        std::fill(a.values.begin(), a.values.end(), cplx(1.0));
        return a;
    }
    const Sequence b = f.profile->realize(d, f.N);
    if (b.window.dim() != d)
        throw std::invalid_argument("profile dimension does not match");
    switch (f.id) {
        case WitnessId::row_delta: {
            Block a(b.window, point_box(d));
            for (std::size_t i = 0; i < b.values.size(); ++i)
                a.values[i] = b.values[i];
            return a;
        }
        case WitnessId::column_delta: {
            Block a(point_box(d), b.window);
            for (std::size_t j = 0; j < b.values.size(); ++j)
                a.values[j] = b.values[j];
            return a;
        }
        case WitnessId::antidiagonal: {
            Block a(b.window, negate(b.window));
            const std::size_t ns = a.n_size();
            std::vector<int> k(static_cast<std::size_t>(d)), n(static_cast<std::size_t>(d));
            for (std::size_t i = 0; i < b.values.size(); ++i) {
                b.window.index(i, k);
                for (int x = 0; x < d; ++x)
                    n[static_cast<std::size_t>(x)] = -k[static_cast<std::size_t>(x)];
                a.values[i * ns + a.n_window.offset(n)] = b.values[i];
            }
            return a;
        }
        case WitnessId::row_profile_box: {
            Block a(Box::cube(d, 2 * f.N), b.window);
            const std::size_t ns = a.n_size();
            for (std::size_t i = 0; i < a.k_size(); ++i)
                for (std::size_t j = 0; j < ns; ++j)
                    a.values[i * ns + j] = b.values[j];
            return a;
        }
        case WitnessId::box:
            break;
    }
    throw std::logic_error("unreachable witness family");
}

double ratio(const Block& a, int d, const ExponentQuad& quad, double s) {
    if (a.dim != d)
        throw std::invalid_argument("block dimension does not match d");
    const double den = norm_l_paren_pq(a, quad.p1, quad.q1, WeightSpec::frequency_power(d, s));
    if (!(den > 0.0))
        throw std::domain_error("ratio denominator is zero");
    const double num = norm_l_paren_pq(shear_apply(a), quad.p2, quad.q2, WeightSpec::unweighted(d));
    return num / den;
}

SlopeFit fit_loglog(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2)
        throw std::invalid_argument("slope fit needs at least two matched points");
    const std::size_t n = x.size();
    std::vector<double> lx(n), ly(n);
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        if (!(x[i] > 0.0) || !(y[i] > 0.0))
            throw std::domain_error("slope fit needs positive values");
        lx[i] = std::log(x[i]);
        ly[i] = std::log(y[i]);
        mx += lx[i];
        my += ly[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (lx[i] - mx) * (lx[i] - mx);
        sxy += (lx[i] - mx) * (ly[i] - my);
    }
    if (sxx == 0.0)
        throw std::domain_error("slope fit needs distinct abscissae");
    SlopeFit f;
    f.slope = sxy / sxx;
    f.intercept = my - f.slope * mx;
    double ss = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double r = ly[i] - (f.intercept + f.slope * lx[i]);
        ss += r * r;
    }
    f.residual = std::sqrt(ss / static_cast<double>(n));
    return f;
}

GrowthResult growth_slope(WitnessId id, const std::optional<Profile>& profile, int d,
                          const ExponentQuad& quad, double s, std::span<const int> Ns) {
    if (Ns.size() < 3)
        throw std::invalid_argument("growth fit needs at least three scales");
    for (std::size_t i = 0; i < Ns.size(); ++i)
        if (Ns[i] <= 0 || (i > 0 && Ns[i] <= Ns[i - 1]))
            throw std::invalid_argument("scales must be positive and increasing");
    GrowthResult g;
    std::vector<double> xs;
    for (int N : Ns) {
        const double r = ratio(make_witness({id, profile, N}, d), d, quad, s);
        if (!(r > 0.0))
            throw std::domain_error("witness ratio vanished at N=" + std::to_string(N));
        g.Ns.push_back(N);
        g.ratios.push_back(r);
        xs.push_back(N);
    }
    g.fit = fit_loglog(xs, g.ratios);
    return g;
}

double FracIntegral::tail_bound(const Exponent& r) const {
    const double order = static_cast<double>(dim) - lambda;
    if (r.is_infinite())
        return input_l1 * std::pow(static_cast<double>(radius) + 1.0, -order);
    const double e = order * r.value();
    const double dd = static_cast<double>(dim);
    if (e <= dd)
        return std::numeric_limits<double>::infinity();
    const double shell = 2.0 * dd * std::pow(3.0, dd - 1.0);
    const double sum = radius >= 1
                           ? shell * std::pow(static_cast<double>(radius), dd - e) / (e - dd)
                           : shell * (1.0 + 1.0 / (e - dd));
    return input_l1 * std::pow(sum, 1.0 / r.value());
}

FracIntegral frac_integral_apply(const Sequence& b, double lambda, int d, std::optional<int> radius) {
    if (d <= 0)
        throw std::invalid_argument("dimension must be positive");
    if (!(lambda > 0.0 && lambda < static_cast<double>(d)))
        throw std::invalid_argument("lambda must lie in (0, d)");
    if (b.window.dim() != d)
        throw std::invalid_argument("sequence dimension does not match d");
    int R = 0;
    if (radius) {
        R = *radius;
    } else {
        std::size_t widest = 0;
        for (const auto& a : b.window.axes())
            widest = std::max(widest, a.size());
        R = static_cast<int>(8 * widest);
    }
    if (R < 0)
        throw std::invalid_argument("kernel radius must be nonnegative");

    FracIntegral res;
    res.radius = R;
    res.lambda = lambda;
    res.dim = d;
    const Box kernel_box = Box::cube(d, R);
    res.value = Sequence(b.window + kernel_box);
    for (double v : b.values)
        res.input_l1 += std::abs(v);
    if (b.values.empty())
        return res;

    const double order = static_cast<double>(d) - lambda;
    std::vector<double> kernel(kernel_box.size());
    std::vector<int> idx(static_cast<std::size_t>(d));
    const auto out_stride = strides(res.value.window);
    std::vector<std::size_t> kernel_off(kernel.size());
    for (std::size_t t = 0; t < kernel.size(); ++t) {
        kernel_box.index(t, idx);
        kernel[t] = std::pow(bracket(std::span<const int>(idx)), -order);
        std::size_t o = 0;
        for (std::size_t a = 0; a < idx.size(); ++a)
            o += static_cast<std::size_t>(idx[a] + R) * out_stride[a];
        kernel_off[t] = o;
    }
    double* out = res.value.values.data();
    if (d == 1) {
        for (std::size_t j = 0; j < b.values.size(); ++j) {
            const double v = b.values[j];
            if (v == 0.0)
                continue;
            double* dst = out + j;
            for (std::size_t t = 0; t < kernel.size(); ++t)
                dst[t] += v * kernel[t];
        }
        return res;
    }
    for (std::size_t j = 0; j < b.values.size(); ++j) {
        const double v = b.values[j];
        if (v == 0.0)
            continue;
        b.window.index(j, idx);
        std::size_t base = 0;
        for (std::size_t a = 0; a < idx.size(); ++a)
            base += static_cast<std::size_t>(idx[a] - b.window.axis(static_cast<int>(a)).lo) *
                    out_stride[a];
        for (std::size_t t = 0; t < kernel.size(); ++t)
            out[base + kernel_off[t]] += v * kernel[t];
    }
    return res;
}

}  // namespace tfshear
